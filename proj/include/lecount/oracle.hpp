#pragma once

#include <functional>
#include <vector>

#include "lecount/labeling.hpp"
#include "lecount/poset.hpp"
#include "lecount/qpoly.hpp"

namespace lecount {

// Exhaustive routines refuse posets above this size unless a larger cap
// is passed explicitly.
inline constexpr int kOracleCap = 12;

// Visits every linear extension as the element sequence
// (f^{-1}(1), ..., f^{-1}(n)), in lexicographic order (the smallest
// eligible element is tried first). Throws LimitError above the cap.
void for_each_extension(const Poset& p,
                        const std::function<void(const std::vector<int>&)>& fn,
                        int cap = kOracleCap);

std::vector<std::vector<int>> linear_extensions(const Poset& p,
                                                int cap = kOracleCap);

// Number of linear extensions, counted by the same backtracking search.
Int extension_count(const Poset& p, int cap = kOracleCap);

// Independent counter: dynamic programming over order ideals keyed by
// the down-set bitmask. Used to cross-check the enumerator.
Int extension_count_ideals(const Poset& p, int cap = kOracleCap);

// extension_count / n!.
Rat extension_density(const Poset& p, int cap = kOracleCap);

enum class Stat { maj, inv };

// Sum of q^{stat(omega . f^{-1})} over all linear extensions f.
QPoly stat_generating_poly(const LabeledPoset& lp, Stat stat,
                           int cap = kOracleCap);

// Entry r counts extensions with f(a) = r+1.
std::vector<Int> spectrum(const Poset& p, int a, int cap = kOracleCap);

// Entry r sums q^{inv(omega . f^{-1})} over extensions with f(a) = r+1.
std::vector<QPoly> q_spectrum(const LabeledPoset& lp, int a,
                              int cap = kOracleCap);

}  // namespace lecount
