#pragma once

#include <vector>

#include "lecount/poset.hpp"

namespace lecount {

// A poset together with a bijective labeling omega: elements -> 1..n.
struct LabeledPoset {
    Poset poset;
    std::vector<int> omega;
};

// Throws IndexError unless omega is a bijection onto 1..n.
void validate_labeling(const LabeledPoset& lp);

// Natural: x < y implies omega(x) < omega(y).
bool is_natural(const LabeledPoset& lp);

// Regular: for all x < z and any y whose label lies strictly between
// omega(x) and omega(z) in either direction, x < y or y < z holds.
bool is_regular(const LabeledPoset& lp);

// Number of comparable pairs x < y with omega(y) < omega(x).
long labeled_inversions(const LabeledPoset& lp);

// Elements x having some up-cover y with omega(x) > omega(y).
std::vector<int> labeled_descents(const LabeledPoset& lp);

// The word omega applied to elements listed in extension order, i.e. the
// permutation omega of the sequence (f^{-1}(1), ..., f^{-1}(n)).
std::vector<int> extension_word(const LabeledPoset& lp,
                                const std::vector<int>& extension);

// Labels of the listed elements compressed to 1..m preserving order.
std::vector<int> standardize_labels(const std::vector<int>& labels);

}  // namespace lecount
