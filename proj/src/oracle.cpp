#include "lecount/oracle.hpp"

#include <cstdint>
#include <unordered_map>

namespace lecount {

namespace {

void check_cap(const Poset& p, int cap) {
    if (p.size() > cap)
        throw LimitError("poset has " + std::to_string(p.size()) +
                         " elements, above the cap of " + std::to_string(cap));
    if (cap > 63)
        throw LimitError("exhaustive search is limited to 63 elements");
}

// Per-element down-set masks over the strict order.
std::vector<uint64_t> down_masks(const Poset& p) {
    int n = p.size();
    std::vector<uint64_t> mask(static_cast<size_t>(n), 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (p.less(y, x)) mask[x] |= uint64_t(1) << y;
    return mask;
}

}  // namespace

void for_each_extension(const Poset& p,
                        const std::function<void(const std::vector<int>&)>& fn,
                        int cap) {
    check_cap(p, cap);
    int n = p.size();
    std::vector<uint64_t> need = down_masks(p);
    std::vector<int> seq;
    seq.reserve(static_cast<size_t>(n));
    uint64_t placed = 0;
    // Backtracking in ascending element order yields lexicographic output.
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(seq.size()) == n) {
            fn(seq);
            return;
        }
        for (int x = 0; x < n; ++x) {
            uint64_t bit = uint64_t(1) << x;
            if (placed & bit) continue;
            if ((need[x] & placed) != need[x]) continue;
            placed |= bit;
            seq.push_back(x);
            self(self);
            seq.pop_back();
            placed &= ~bit;
        }
    };
    rec(rec);
}

std::vector<std::vector<int>> linear_extensions(const Poset& p, int cap) {
    std::vector<std::vector<int>> out;
    for_each_extension(p, [&](const std::vector<int>& seq) {
        out.push_back(seq);
    }, cap);
    return out;
}

Int extension_count(const Poset& p, int cap) {
    Int count = 0;
    for_each_extension(p, [&](const std::vector<int>&) { ++count; }, cap);
    return count;
}

Int extension_count_ideals(const Poset& p, int cap) {
    check_cap(p, cap);
    int n = p.size();
    std::vector<uint64_t> need = down_masks(p);
    std::unordered_map<uint64_t, Int> memo;
    // Number of ways to order the remaining elements given a placed ideal.
    auto rec = [&](auto&& self, uint64_t placed) -> Int {
        if (placed == (n == 64 ? ~uint64_t(0) : (uint64_t(1) << n) - 1))
            return 1;
        auto it = memo.find(placed);
        if (it != memo.end()) return it->second;
        Int total = 0;
        for (int x = 0; x < n; ++x) {
            uint64_t bit = uint64_t(1) << x;
            if (placed & bit) continue;
            if ((need[x] & placed) != need[x]) continue;
            total += self(self, placed | bit);
        }
        memo.emplace(placed, total);
        return total;
    };
    return rec(rec, 0);
}

Rat extension_density(const Poset& p, int cap) {
    Rat r(extension_count(p, cap), factorial(p.size()));
    r.canonicalize();
    return r;
}

QPoly stat_generating_poly(const LabeledPoset& lp, Stat stat, int cap) {
    validate_labeling(lp);
    QPoly total;
    for_each_extension(lp.poset, [&](const std::vector<int>& seq) {
        PermStats st = perm_stats(extension_word(lp, seq));
        total += QPoly::monomial(stat == Stat::maj ? st.maj : st.inv);
    }, cap);
    return total;
}

std::vector<Int> spectrum(const Poset& p, int a, int cap) {
    if (a < 0 || a >= p.size())
        throw IndexError("spectrum element outside the poset");
    std::vector<Int> out(static_cast<size_t>(p.size()), Int(0));
    for_each_extension(p, [&](const std::vector<int>& seq) {
        for (size_t r = 0; r < seq.size(); ++r) {
            if (seq[r] == a) {
                ++out[r];
                break;
            }
        }
    }, cap);
    return out;
}

std::vector<QPoly> q_spectrum(const LabeledPoset& lp, int a, int cap) {
    validate_labeling(lp);
    if (a < 0 || a >= lp.poset.size())
        throw IndexError("spectrum element outside the poset");
    std::vector<QPoly> out(static_cast<size_t>(lp.poset.size()));
    for_each_extension(lp.poset, [&](const std::vector<int>& seq) {
        PermStats st = perm_stats(extension_word(lp, seq));
        for (size_t r = 0; r < seq.size(); ++r) {
            if (seq[r] == a) {
                out[r] += QPoly::monomial(st.inv);
                break;
            }
        }
    }, cap);
    return out;
}

}  // namespace lecount
