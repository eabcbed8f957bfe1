#pragma once

#include <vector>

#include "lecount/labeling.hpp"
#include "lecount/numeric.hpp"
#include "lecount/poset.hpp"
#include "lecount/qpoly.hpp"

namespace lecount {

// Position spectra: entry r-1 counts the linear extensions that place a
// tracked element at position r. The combines merge two disjoint posets
// joined by one new cover between their tracked elements; "lower" keeps
// the tracked element of the first argument (which sits below the new
// cover), "upper" keeps the second's (above it).
std::vector<Int> atkinson_combine_lower(const std::vector<Int>& alpha,
                                        const std::vector<Int>& beta);
std::vector<Int> atkinson_combine_upper(const std::vector<Int>& alpha,
                                        const std::vector<Int>& beta);

// q-analogues weighting each extension by q^inv, valid when every label
// of the lower poset is smaller than every label of the upper one.
std::vector<QPoly> q_atkinson_combine_lower(const std::vector<QPoly>& alpha,
                                            const std::vector<QPoly>& beta);
std::vector<QPoly> q_atkinson_combine_upper(const std::vector<QPoly>& alpha,
                                            const std::vector<QPoly>& beta);

// Spectrum of element a in a tree poset, by peeling the Hasse tree from
// the leaves in toward a.
std::vector<Int> atkinson_spectrum(const Poset& p, int a);

// Extension count of a tree poset: spectrum sum.
Int atkinson_count(const Poset& p);

// Labeling under which the recursion rooted at a satisfies the combine
// label hypothesis at every merge: each subtree takes a consecutive
// block, below-subtrees stacked under their parent and above-subtrees
// over it.
std::vector<int> atkinson_compatible_labeling(const Poset& p, int a);

// q-spectrum of a in a labeled tree. Merges children in the only order
// that can satisfy the label hypothesis (below-children by descending
// labels, above-children by ascending); IncompatibleLabelingError when
// the hypothesis fails even then.
std::vector<QPoly> q_atkinson_spectrum(const LabeledPoset& lp, int a);

}  // namespace lecount
