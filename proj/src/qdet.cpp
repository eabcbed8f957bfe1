#include "lecount/qdet.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

#include "lecount/dcomplete.hpp"
#include "lecount/errors.hpp"
#include "lecount/folding.hpp"

namespace lecount {

namespace {

std::map<long, int> hook_multiset(const std::vector<long>& hooks) {
    std::map<long, int> m;
    for (long h : hooks) {
        ++m[h];
    }
    return m;
}

// Restriction of a realized labeling to one component-array entry,
// compressed back to 1..m.
LabeledPoset entry_labeling(const ComponentArray::Entry& e,
                            const std::vector<int>& omega) {
    std::vector<int> labels;
    labels.reserve(e.elements.size());
    for (int x : e.elements) {
        labels.push_back(omega[x]);
    }
    return {e.poset, standardize_labels(labels)};
}

struct StatDetPlan {
    RealizedMobile realized;
    ComponentArray array;
};

StatDetPlan plan_stat_det(const MobileSpec& m, const std::vector<int>& omega) {
    StatDetPlan plan{realize(m), {}};
    validate_labeling({plan.realized.poset, omega});
    PathFolds pf = path_folds(m);
    std::vector<int> order(pf.folds.size() + 1);
    std::iota(order.begin(), order.end(), 0);
    plan.array = component_array(plan.realized.poset, pf.folds, order);
    return plan;
}

}  // namespace

QPoly q_det_count(int n, int k,
                  const std::function<QDetEntry(int, int)>& entry) {
    const int sz = k + 1;
    std::vector<std::vector<QPoly>> numer(sz, std::vector<QPoly>(sz));
    std::vector<std::vector<std::map<long, int>>> denom(
        sz, std::vector<std::map<long, int>>(sz));
    for (int i = 0; i < sz; ++i) {
        if (i > 0) {
            numer[i][i - 1] = QPoly(1);
        }
        for (int j = i; j < sz; ++j) {
            QDetEntry e = entry(i, j);
            numer[i][j] = std::move(e.numerator);
            denom[i][j] = hook_multiset(e.hooks);
        }
    }

    // Clear each column to the least common q-integer product.
    std::vector<std::map<long, int>> cleared(sz);
    for (int j = 0; j < sz; ++j) {
        auto& common = cleared[j];
        for (int i = 0; i < sz; ++i) {
            for (const auto& [h, mult] : denom[i][j]) {
                common[h] = std::max(common[h], mult);
            }
        }
        for (int i = 0; i < sz; ++i) {
            if (numer[i][j].is_zero()) {
                continue;
            }
            for (const auto& [h, mult] : common) {
                auto found = denom[i][j].find(h);
                const int have = found == denom[i][j].end() ? 0 : found->second;
                for (int t = have; t < mult; ++t) {
                    numer[i][j] *= q_int(h);
                }
            }
        }
    }

    int sign = 1;
    QPoly prev(1);
    for (int r = 0; r + 1 < sz; ++r) {
        if (numer[r][r].is_zero()) {
            int swap_row = -1;
            for (int i = r + 1; i < sz; ++i) {
                if (!numer[i][r].is_zero()) {
                    swap_row = i;
                    break;
                }
            }
            if (swap_row < 0) {
                return QPoly();
            }
            std::swap(numer[r], numer[swap_row]);
            sign = -sign;
        }
        for (int i = r + 1; i < sz; ++i) {
            for (int j = r + 1; j < sz; ++j) {
                numer[i][j] = (numer[r][r] * numer[i][j] -
                               numer[i][r] * numer[r][j])
                                  .divide_exact(prev);
            }
            numer[i][r] = QPoly();
        }
        prev = numer[r][r];
    }

    QPoly result = q_factorial(n) * numer[sz - 1][sz - 1];
    if (sign < 0) {
        result = -result;
    }
    for (const auto& column : cleared) {
        for (const auto& [h, mult] : column) {
            for (int t = 0; t < mult; ++t) {
                result = result.divide_exact(q_int(h));
            }
        }
    }
    return result;
}

std::vector<int> regular_tree_labeling(const Poset& p) {
    if (!is_rooted_tree_poset(p)) {
        throw NotRootedTreeError("poset is not a rooted tree");
    }
    const int n = p.size();
    std::vector<int> labels(n, 0);
    if (n == 0) {
        return labels;
    }
    auto assign = [&](auto&& self, int v, int lo, int hi) -> void {
        labels[v] = hi;
        int cursor = lo;
        for (int c : p.down_covers(v)) {
            const int size = static_cast<int>(p.below(c).size()) + 1;
            self(self, c, cursor, cursor + size - 1);
            cursor += size;
        }
    };
    assign(assign, p.maximal_elements().front(), 1, n);
    return labels;
}

bool is_mobile_tree_spec(const MobileSpec& m) {
    for (const auto& at : m.hangers) {
        for (const Poset& h : at) {
            if (!is_rooted_tree_poset(h)) {
                return false;
            }
        }
    }
    for (const auto& a : m.anchors) {
        if (!is_rooted_tree_poset(a.poset)) {
            return false;
        }
    }
    return true;
}

LabeledPoset sigma_partitioned_regular_labeling(const MobileSpec& m) {
    if (!is_mobile_tree_spec(m)) {
        throw NotMobileTreeError(
            "spec has a hanger or anchor that is not a rooted tree");
    }
    RealizedMobile r = realize(m);
    const int n = r.poset.size();
    std::vector<int> omega(n, 0);
    if (n == 0) {
        return {std::move(r.poset), std::move(omega)};
    }

    PathFolds pf = path_folds(m);
    int base = 0;
    for (const auto& comp : remove_covers(r.poset, pf.folds).components()) {
        auto [sub, elems] = r.poset.induced(comp);
        std::vector<int> local = regular_tree_labeling(sub);
        for (std::size_t idx = 0; idx < elems.size(); ++idx) {
            omega[elems[idx]] = base + local[idx];
        }
        base += static_cast<int>(elems.size());
    }
    return {std::move(r.poset), std::move(omega)};
}

QPoly q_maj_det(const MobileSpec& m, const std::vector<int>& omega,
                int cap) {
    StatDetPlan plan = plan_stat_det(m, omega);
    const int n = plan.realized.poset.size();
    if (n == 0) {
        return QPoly(1);
    }
    return q_det_count(n, plan.array.k, [&](int i, int j) {
        const auto& e = plan.array.entry(i, j);
        const long exponent =
            hook_major_index(entry_labeling(e, omega), cap);
        return QDetEntry{QPoly::monomial(exponent), hook_lengths(e.poset)};
    });
}

QPoly q_inv_det(const MobileSpec& m, const std::vector<int>& omega,
                int cap) {
    if (!is_mobile_tree_spec(m)) {
        throw NotMobileTreeError(
            "spec has a hanger or anchor that is not a rooted tree");
    }
    StatDetPlan plan = plan_stat_det(m, omega);
    const int n = plan.realized.poset.size();
    if (n == 0) {
        return QPoly(1);
    }
    if (!is_regular({plan.realized.poset, omega})) {
        throw NotPartitionedRegularError("labeling is not regular");
    }
    const int blocks = plan.array.k + 1;
    int previous_max = 0;
    for (int t = 0; t < blocks; ++t) {
        const auto& elems = plan.array.entry(t, t).elements;
        int lo = n + 1;
        int hi = 0;
        for (int x : elems) {
            lo = std::min(lo, omega[x]);
            hi = std::max(hi, omega[x]);
        }
        if (lo <= previous_max) {
            throw NotPartitionedRegularError(
                "component labels overlap across the path order at block " +
                std::to_string(t));
        }
        previous_max = hi;
    }

    return q_det_count(n, plan.array.k, [&](int i, int j) {
        const auto& e = plan.array.entry(i, j);
        require_d_complete(e.poset, cap);
        const long exponent = labeled_inversions(entry_labeling(e, omega));
        return QDetEntry{QPoly::monomial(exponent), hook_lengths(e.poset)};
    });
}

QPoly q_macmahon_inv(int n, const std::vector<int>& descents) {
    (void)ribbon(n, descents);
    std::vector<int> srt(descents);
    std::sort(srt.begin(), srt.end());
    srt.erase(std::unique(srt.begin(), srt.end()), srt.end());
    std::vector<long> s;
    s.reserve(srt.size() + 2);
    s.push_back(0);
    s.insert(s.end(), srt.begin(), srt.end());
    s.push_back(n);
    return q_det_count(n, static_cast<int>(srt.size()), [&](int i, int j) {
        std::vector<long> hooks(s[j + 1] - s[i]);
        std::iota(hooks.begin(), hooks.end(), 1);
        return QDetEntry{QPoly(1), std::move(hooks)};
    });
}

}  // namespace lecount
