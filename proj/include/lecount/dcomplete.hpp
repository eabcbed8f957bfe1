#pragma once

#include <string>
#include <vector>

#include "lecount/labeling.hpp"
#include "lecount/numeric.hpp"
#include "lecount/poset.hpp"
#include "lecount/qpoly.hpp"

namespace lecount {

// Default size cap for the d-completeness scan.
inline constexpr int kDCompleteCap = 25;

// Interval [w,z] isomorphic to a double-tailed diamond with 2k-2
// elements; x and y are its unique incomparable pair.
struct DkInterval {
    int k = 0;
    int w = 0;
    int z = 0;
    int x = 0;
    int y = 0;
};

// Double-tailed diamond d_k(1): a diamond with a chain of k-3 elements
// added below and above. Indices run bottom tail, x, y, top tail.
Poset double_tailed_diamond(int k);

std::vector<DkInterval> dk_intervals(const Poset& p);

// Elements lying in the neck of some interval from dk_intervals, i.e.
// above both incomparable elements, ascending.
std::vector<int> neck_elements(const Poset& p);

// Elements x such that every y >= x has at most one up-cover, ascending.
std::vector<int> top_tree(const Poset& p);

// Top-tree elements that are in no neck, ascending.
std::vector<int> acyclic_elements(const Poset& p);

struct DCompleteCheck {
    bool ok = true;
    int clause = 0;        // violated clause 1, 2 or 3 when !ok
    std::string detail;
};

// Checks the three defining conditions. Throws LimitError above the cap.
DCompleteCheck check_d_complete(const Poset& p, int cap = kDCompleteCap);
bool is_d_complete(const Poset& p, int cap = kDCompleteCap);
// Throws NotDCompleteError carrying the violated clause.
void require_d_complete(const Poset& p, int cap = kDCompleteCap);

// Hook lengths by the neck recurrence: elements outside every neck get
// their down-set size, a neck element z topping an interval with
// incomparable pair x, y over w gets h(x) + h(y) - h(w). With checked
// set, disagreeing candidate intervals raise AmbiguityError; otherwise
// the interval with smallest (k, w) wins.
std::vector<long> hook_lengths(const Poset& p, bool checked = true);

// n! / product of hooks; verifies d-completeness first.
Int hook_count(const Poset& p, int cap = kDCompleteCap);
// 1 / product of hooks, the extension density by the hook formula.
Rat hook_density(const Poset& p, int cap = kDCompleteCap);

// Sum of hook lengths over the descents of the labeling.
long hook_major_index(const LabeledPoset& lp, int cap = kDCompleteCap);

// Major-index generating polynomial by hooks:
// q^{maj} [n]_q! / prod [h]_q. Matches the enumerator for natural
// labelings, and for rooted-tree posets under every labeling; other
// d-complete shapes admit labelings where the closed form differs.
QPoly q_hook_maj(const LabeledPoset& lp, int cap = kDCompleteCap);

// Inversion generating polynomial for a regularly labeled rooted tree:
// q^{inv} [n]_q! / prod [h]_q. Throws NotRootedTreeError or
// NotRegularLabelingError when the hypotheses fail.
QPoly q_inv_rooted_tree(const LabeledPoset& lp);

// Connected with every element covered by at most one element.
bool is_rooted_tree_poset(const Poset& p);
// Connected with an acyclic Hasse diagram.
bool is_tree_poset(const Poset& p);

}  // namespace lecount
