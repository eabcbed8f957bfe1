#pragma once

#include <functional>
#include <vector>

#include "lecount/labeling.hpp"
#include "lecount/mobile.hpp"
#include "lecount/poset.hpp"
#include "lecount/qpoly.hpp"

namespace lecount {

// One matrix entry for the q-determinants: a polynomial numerator over a
// denominator that is the product of the q-integers [h]_q for the listed
// hook lengths.
struct QDetEntry {
    QPoly numerator;
    std::vector<long> hooks;
};

// [n]_q! times the determinant of the (k+1)x(k+1) matrix with entry(i,j)
// above the sub-diagonal, 1 on it and 0 below. Columns are cleared to a
// common q-integer product, the elimination is fraction-free over
// integer-coefficient polynomials, and the clearing factors are divided
// back out at the end; a non-polynomial result raises
// NonPolynomialError.
QPoly q_det_count(int n, int k,
                  const std::function<QDetEntry(int, int)>& entry);

// Subtree-consecutive labels for a rooted tree: the root takes the top
// label and each child's subtree takes a consecutive block below, in
// ascending child order. The result is a regular labeling.
std::vector<int> regular_tree_labeling(const Poset& p);

// Whether every hanger (and the anchor, if any) is a rooted tree, so the
// realized mobile is a tree poset.
bool is_mobile_tree_spec(const MobileSpec& m);

// Labeling of realize(m) that gives the fold components consecutive
// label blocks in path order and labels each component
// subtree-consecutively. Throws NotMobileTreeError unless
// is_mobile_tree_spec(m).
LabeledPoset sigma_partitioned_regular_labeling(const MobileSpec& m);

// Major-index generating determinant: every component-array entry
// contributes q^(sum of entry hooks at labeled descents) over the
// product of its q-integer hooks.
QPoly q_maj_det(const MobileSpec& m, const std::vector<int>& omega,
                int cap = kDCompleteCap);

// Inversion generating determinant for mobile tree specs; requires omega
// to be regular with component labels split into increasing blocks along
// the path order (NotPartitionedRegularError otherwise).
QPoly q_inv_det(const MobileSpec& m, const std::vector<int>& omega,
                int cap = kDCompleteCap);

// Inversion generating polynomial of a ribbon labeled by position, via
// the q-factorial determinant with entries 1/[s_{j+1}-s_i]_q!.
QPoly q_macmahon_inv(int n, const std::vector<int>& descents);

}  // namespace lecount
