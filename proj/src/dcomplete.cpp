#include "lecount/dcomplete.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace lecount {

namespace {

std::vector<int> interval_elements(const Poset& p, int w, int z) {
    std::vector<int> elems;
    for (int v = 0; v < p.size(); ++v)
        if (p.leq(w, v) && p.leq(v, z)) elems.push_back(v);
    return elems;
}

// The unique incomparable pair of a candidate interval, if there is
// exactly one.
bool unique_incomparable_pair(const Poset& p, const std::vector<int>& elems,
                              int* x, int* y) {
    int found = 0;
    for (size_t i = 0; i < elems.size(); ++i) {
        for (size_t j = i + 1; j < elems.size(); ++j) {
            if (!p.comparable(elems[i], elems[j])) {
                if (++found > 1) return false;
                *x = elems[i];
                *y = elems[j];
            }
        }
    }
    return found == 1;
}

std::string join(const std::vector<int>& v) {
    std::ostringstream out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out << ",";
        out << v[i];
    }
    return out.str();
}

// Convex set isomorphic to d_k(1) with the maximum removed.
struct DkMinusSet {
    int k = 0;
    std::vector<int> elems;     // sorted
    int min_elem = 0;
    std::vector<int> max_elems;  // the incomparable pair for k=3, else top
};

std::vector<DkMinusSet> dk_minus_sets(const Poset& p) {
    std::vector<DkMinusSet> out;
    int n = p.size();
    // k = 3: an element with two incomparable up-covers.
    for (int w = 0; w < n; ++w) {
        std::vector<int> up = p.up_covers(w);
        for (size_t i = 0; i < up.size(); ++i) {
            for (size_t j = i + 1; j < up.size(); ++j) {
                if (!p.comparable(up[i], up[j])) {
                    DkMinusSet s;
                    s.k = 3;
                    s.elems = {w, up[i], up[j]};
                    std::sort(s.elems.begin(), s.elems.end());
                    s.min_elem = w;
                    s.max_elems = {up[i], up[j]};
                    out.push_back(std::move(s));
                }
            }
        }
    }
    // k >= 4: intervals shaped like d_k(1) truncated below the maximum.
    for (int w = 0; w < n; ++w) {
        for (int t = 0; t < n; ++t) {
            if (!p.less(w, t)) continue;
            std::vector<int> elems = interval_elements(p, w, t);
            int m = static_cast<int>(elems.size());
            if (m < 5 || m % 2 == 0) continue;
            int x = 0, y = 0;
            if (!unique_incomparable_pair(p, elems, &x, &y)) continue;
            int below = 0, above = 0;
            for (int c : elems) {
                if (p.less(c, x)) ++below;
                if (p.less(x, c)) ++above;
            }
            if (below != above + 1 || m != 2 * below + 1) continue;
            DkMinusSet s;
            s.k = below + 2;
            s.elems = std::move(elems);
            s.min_elem = w;
            s.max_elems = {t};
            out.push_back(std::move(s));
        }
    }
    return out;
}

}  // namespace

Poset double_tailed_diamond(int k) {
    if (k < 3) throw IndexError("double-tailed diamond needs k >= 3");
    int n = 2 * k - 2;
    std::vector<CoverPair> covers;
    int tail = k - 3;
    // Bottom tail 0..tail-1, then the diamond bottom at tail.
    for (int i = 0; i + 1 <= tail; ++i) covers.push_back({i, i + 1});
    int w = tail;
    int x = w + 1, y = w + 2;
    covers.push_back({w, x});
    covers.push_back({w, y});
    int z = y + 1;
    covers.push_back({x, z});
    covers.push_back({y, z});
    for (int i = z; i + 1 < n; ++i) covers.push_back({i, i + 1});
    return Poset::from_covers(n, covers);
}

std::vector<DkInterval> dk_intervals(const Poset& p) {
    std::vector<DkInterval> out;
    int n = p.size();
    for (int w = 0; w < n; ++w) {
        for (int z = 0; z < n; ++z) {
            if (!p.less(w, z)) continue;
            std::vector<int> elems = interval_elements(p, w, z);
            int m = static_cast<int>(elems.size());
            if (m < 4 || m % 2) continue;
            int x = 0, y = 0;
            if (!unique_incomparable_pair(p, elems, &x, &y)) continue;
            int below = 0, above = 0;
            for (int c : elems) {
                if (p.less(c, x)) ++below;
                if (p.less(x, c)) ++above;
            }
            if (below != above || below != (m - 2) / 2) continue;
            out.push_back({m / 2 + 1, w, z, x, y});
        }
    }
    return out;
}

std::vector<int> neck_elements(const Poset& p) {
    std::set<int> neck;
    for (const DkInterval& iv : dk_intervals(p)) {
        for (int v = 0; v < p.size(); ++v) {
            bool in_interval = v == iv.z || (p.less(iv.w, v) && p.less(v, iv.z));
            if (in_interval && p.less(iv.x, v) && p.less(iv.y, v))
                neck.insert(v);
        }
    }
    return {neck.begin(), neck.end()};
}

std::vector<int> top_tree(const Poset& p) {
    int n = p.size();
    std::vector<int> up_count(static_cast<size_t>(n), 0);
    for (const CoverPair& c : p.covers()) ++up_count[c.lower];
    std::vector<int> out;
    for (int x = 0; x < n; ++x) {
        bool ok = up_count[x] <= 1;
        for (int y = 0; y < n && ok; ++y)
            if (p.less(x, y) && up_count[y] > 1) ok = false;
        if (ok) out.push_back(x);
    }
    return out;
}

std::vector<int> acyclic_elements(const Poset& p) {
    std::vector<int> gamma = top_tree(p);
    std::vector<int> neck = neck_elements(p);
    std::vector<int> out;
    std::set_difference(gamma.begin(), gamma.end(), neck.begin(), neck.end(),
                        std::back_inserter(out));
    return out;
}

DCompleteCheck check_d_complete(const Poset& p, int cap) {
    if (p.size() > cap)
        throw LimitError("poset has " + std::to_string(p.size()) +
                         " elements, above the cap of " + std::to_string(cap));
    std::vector<DkInterval> ivs = dk_intervals(p);
    std::set<std::pair<int, std::vector<int>>> interval_sets;
    for (const DkInterval& iv : ivs)
        interval_sets.insert({iv.k, interval_elements(p, iv.w, iv.z)});

    std::vector<DkMinusSet> minus = dk_minus_sets(p);

    // (1) every truncated set completes to a full interval on top.
    for (const DkMinusSet& s : minus) {
        bool completes = false;
        for (int q = 0; q < p.size() && !completes; ++q) {
            if (std::binary_search(s.elems.begin(), s.elems.end(), q))
                continue;
            bool covers_all = true;
            for (int m : s.max_elems)
                if (!p.is_cover(m, q)) covers_all = false;
            if (!covers_all) continue;
            std::vector<int> extended = s.elems;
            extended.push_back(q);
            std::sort(extended.begin(), extended.end());
            if (interval_sets.count({s.k, extended})) completes = true;
        }
        if (!completes)
            return {false, 1,
                    "truncated set {" + join(s.elems) + "} does not complete"};
    }

    // (2) the maximum of an interval covers nothing outside it.
    for (const DkInterval& iv : ivs) {
        std::vector<int> elems = interval_elements(p, iv.w, iv.z);
        for (int c : p.down_covers(iv.z)) {
            if (!std::binary_search(elems.begin(), elems.end(), c))
                return {false, 2,
                        "top " + std::to_string(iv.z) +
                            " covers " + std::to_string(c) +
                            " outside its interval"};
        }
    }

    // (3) no two truncated sets differ only in their minimal elements.
    std::map<std::pair<int, std::vector<int>>, std::vector<int>> seen;
    for (const DkMinusSet& s : minus) {
        std::vector<int> rest;
        for (int v : s.elems)
            if (v != s.min_elem) rest.push_back(v);
        auto [it, inserted] = seen.try_emplace({s.k, rest}, s.elems);
        if (!inserted && it->second != s.elems)
            return {false, 3,
                    "truncated sets {" + join(it->second) + "} and {" +
                        join(s.elems) + "} differ only in minimal elements"};
    }
    return {true, 0, ""};
}

bool is_d_complete(const Poset& p, int cap) {
    return check_d_complete(p, cap).ok;
}

void require_d_complete(const Poset& p, int cap) {
    DCompleteCheck c = check_d_complete(p, cap);
    if (!c.ok) throw NotDCompleteError(c.clause, c.detail);
}

std::vector<long> hook_lengths(const Poset& p, bool checked) {
    int n = p.size();
    // Candidate intervals grouped by their top, ordered by (k, w).
    std::map<int, std::vector<DkInterval>> tops;
    for (const DkInterval& iv : dk_intervals(p)) tops[iv.z].push_back(iv);
    for (auto& entry : tops)
        std::sort(entry.second.begin(), entry.second.end(),
                  [](const DkInterval& a, const DkInterval& b) {
                      return std::tie(a.k, a.w, a.x, a.y) <
                             std::tie(b.k, b.w, b.x, b.y);
                  });

    std::vector<int> order(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) order[v] = v;
    std::vector<long> downset(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v)
        downset[v] = static_cast<long>(p.below(v).size()) + 1;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return downset[a] < downset[b]; });

    std::vector<long> h(static_cast<size_t>(n), 0);
    for (int v : order) {
        auto it = tops.find(v);
        if (it == tops.end()) {
            h[v] = downset[v];
            continue;
        }
        long value = 0;
        bool have = false;
        for (const DkInterval& iv : it->second) {
            long cand = h[iv.x] + h[iv.y] - h[iv.w];
            if (!have) {
                value = cand;
                have = true;
                if (!checked) break;
            } else if (cand != value) {
                throw AmbiguityError(
                    "hook at " + std::to_string(v) + ": candidates " +
                    std::to_string(value) + " and " + std::to_string(cand));
            }
        }
        h[v] = value;
    }
    return h;
}

Int hook_count(const Poset& p, int cap) {
    require_d_complete(p, cap);
    Int prod = 1;
    for (long hl : hook_lengths(p)) prod *= hl;
    Rat r(factorial(p.size()), prod);
    r.canonicalize();
    return to_integer(r);
}

Rat hook_density(const Poset& p, int cap) {
    require_d_complete(p, cap);
    Int prod = 1;
    for (long hl : hook_lengths(p)) prod *= hl;
    Rat r(1, prod);
    r.canonicalize();
    return r;
}

long hook_major_index(const LabeledPoset& lp, int cap) {
    require_d_complete(lp.poset, cap);
    std::vector<long> h = hook_lengths(lp.poset);
    long maj = 0;
    for (int x : labeled_descents(lp)) maj += h[x];
    return maj;
}

QPoly q_hook_maj(const LabeledPoset& lp, int cap) {
    require_d_complete(lp.poset, cap);
    std::vector<long> h = hook_lengths(lp.poset);
    long maj = 0;
    for (int x : labeled_descents(lp)) maj += h[x];
    QPoly den(1);
    for (long hl : h) den *= q_int(hl);
    QPoly num = QPoly::monomial(maj) * q_factorial(lp.poset.size());
    return num.divide_exact(den);
}

QPoly q_inv_rooted_tree(const LabeledPoset& lp) {
    if (!is_rooted_tree_poset(lp.poset))
        throw NotRootedTreeError("poset is not a rooted tree");
    if (!is_regular(lp))
        throw NotRegularLabelingError("labeling is not regular");
    std::vector<long> h = hook_lengths(lp.poset);
    QPoly den(1);
    for (long hl : h) den *= q_int(hl);
    QPoly num = QPoly::monomial(labeled_inversions(lp)) *
                q_factorial(lp.poset.size());
    return num.divide_exact(den);
}

bool is_rooted_tree_poset(const Poset& p) {
    if (p.size() == 0) return true;
    std::vector<int> up_count(static_cast<size_t>(p.size()), 0);
    for (const CoverPair& c : p.covers()) ++up_count[c.lower];
    for (int v : up_count)
        if (v > 1) return false;
    return p.is_connected();
}

bool is_tree_poset(const Poset& p) {
    if (p.size() == 0) return true;
    return p.is_connected() &&
           static_cast<int>(p.covers().size()) == p.size() - 1;
}

}  // namespace lecount
