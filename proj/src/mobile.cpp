#include "lecount/mobile.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "lecount/errors.hpp"
#include "lecount/folding.hpp"

namespace lecount {

namespace {

std::vector<int> validate_descents(int n, std::vector<int> descents) {
    if (n < 0) {
        throw IndexError("ribbon size must be nonnegative");
    }
    std::sort(descents.begin(), descents.end());
    descents.erase(std::unique(descents.begin(), descents.end()),
                   descents.end());
    for (int d : descents) {
        if (d < 1 || d > n - 1) {
            throw IndexError("descent " + std::to_string(d) +
                             " outside 1.." + std::to_string(n - 1));
        }
    }
    return descents;
}

void validate_hanger(const Poset& h) {
    if (h.size() == 0) {
        throw IndexError("hanger poset is empty");
    }
    if (!h.is_connected()) {
        throw NotConnectedError("hanger poset is not connected");
    }
    require_d_complete(h);
}

int anchor_index(const MobileSpec& m) {
    if (m.anchors.size() > 1) {
        throw MultipleAnchorError("mobile spec has " +
                                  std::to_string(m.anchors.size()) +
                                  " anchors, at most one is allowed");
    }
    if (m.anchors.empty()) {
        return 0;
    }
    int j = m.anchors.front().position;
    if (j < 1 || j > m.ribbon_size) {
        throw IndexError("anchor position " + std::to_string(j) +
                         " outside 1.." + std::to_string(m.ribbon_size));
    }
    return j;
}

std::vector<Rat> solve_linear(std::vector<std::vector<Rat>> a,
                              std::vector<Rat> rhs) {
    const int n = static_cast<int>(rhs.size());
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int r = c; r < n; ++r) {
            if (a[r][c] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) {
            throw InterpolationMismatchError(
                "interpolation system is singular");
        }
        std::swap(a[c], a[pivot]);
        std::swap(rhs[c], rhs[pivot]);
        for (int r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) {
                continue;
            }
            Rat f = a[r][c] / a[c][c];
            for (int j = c; j < n; ++j) {
                a[r][j] -= f * a[c][j];
            }
            rhs[r] -= f * rhs[c];
        }
    }
    std::vector<Rat> x(n);
    for (int i = 0; i < n; ++i) {
        x[i] = rhs[i] / a[i][i];
    }
    return x;
}

}  // namespace

Poset ribbon(int n, const std::vector<int>& descents) {
    auto s = validate_descents(n, descents);
    std::vector<CoverPair> covers;
    covers.reserve(n > 0 ? n - 1 : 0);
    for (int i = 1; i < n; ++i) {
        if (std::binary_search(s.begin(), s.end(), i)) {
            covers.push_back({i, i - 1});
        } else {
            covers.push_back({i - 1, i});
        }
    }
    return Poset::from_covers(n, covers);
}

Int macmahon_count(int n, const std::vector<int>& descents) {
    auto mid = validate_descents(n, descents);
    std::vector<long> s;
    s.reserve(mid.size() + 2);
    s.push_back(0);
    s.insert(s.end(), mid.begin(), mid.end());
    s.push_back(n);
    Rat det = det_engine(static_cast<int>(mid.size()),
                         [&](int i, int j) -> Rat {
                             return Rat(1, factorial(s[j + 1] - s[i]));
                         });
    return to_integer(factorial(n) * det);
}

RealizedMobile realize(const MobileSpec& m) {
    const int n = m.ribbon_size;
    auto descents = validate_descents(n, m.descents);
    if (static_cast<int>(m.hangers.size()) > n) {
        throw IndexError("hangers listed for " +
                         std::to_string(m.hangers.size()) +
                         " positions on a ribbon of " + std::to_string(n));
    }
    anchor_index(m);

    RealizedMobile r{ribbon(n, descents), {}, {}, {}};
    r.ribbon.resize(n);
    std::iota(r.ribbon.begin(), r.ribbon.end(), 0);
    r.hangers.resize(n);

    for (std::size_t pos = 0; pos < m.hangers.size(); ++pos) {
        for (const Poset& h : m.hangers[pos]) {
            validate_hanger(h);
            auto tops = h.maximal_elements();
            if (tops.size() != 1) {
                throw NotDCompleteError(
                    1, "hanger has no unique maximal element");
            }
            const int base = r.poset.size();
            r.poset = slant_sum(r.poset, static_cast<int>(pos), h, tops[0]);
            std::vector<int> ids(h.size());
            std::iota(ids.begin(), ids.end(), base);
            r.hangers[pos].push_back(std::move(ids));
        }
    }

    for (const auto& a : m.anchors) {
        if (a.poset.size() == 0) {
            throw IndexError("anchor poset is empty");
        }
        if (a.element < 0 || a.element >= a.poset.size()) {
            throw IndexError("anchor element out of range");
        }
        if (!a.poset.is_connected()) {
            throw NotConnectedError("anchor poset is not connected");
        }
        require_d_complete(a.poset);
        auto acyclic = acyclic_elements(a.poset);
        if (!std::binary_search(acyclic.begin(), acyclic.end(), a.element)) {
            throw IndexError("anchor element " + std::to_string(a.element) +
                             " is not acyclic in the anchor poset");
        }
        const int base = r.poset.size();
        r.poset = add_relations(disjoint_sum(r.poset, a.poset),
                                {{a.position - 1, base + a.element}});
        r.anchor.resize(a.poset.size());
        std::iota(r.anchor.begin(), r.anchor.end(), base);
    }
    return r;
}

PathFolds path_folds(const MobileSpec& m) {
    const int n = m.ribbon_size;
    auto descents = validate_descents(n, m.descents);
    const int j = anchor_index(m);

    PathFolds out;
    out.anchor_position = j;
    for (int i = 1; i < n; ++i) {
        const bool descent =
            std::binary_search(descents.begin(), descents.end(), i);
        if (j == 0) {
            if (descent) {
                out.folds.push_back({i, i - 1});
            }
        } else if (descent && i < j) {
            out.folds.push_back({i, i - 1});
        } else if (!descent && i >= j) {
            out.folds.push_back({i - 1, i});
        }
    }
    return out;
}

Int count_mobile(const MobileSpec& m, int cap) {
    RealizedMobile r = realize(m);
    if (r.poset.size() == 0) {
        return 1;
    }
    PathFolds pf = path_folds(m);
    std::vector<int> order(pf.folds.size() + 1);
    std::iota(order.begin(), order.end(), 0);
    return det_count(r.poset, pf.folds, order, [cap](const Poset& q) {
        return hook_density(q, cap);
    });
}

std::optional<MobileMatch> recognize_mobile_tree(const Poset& p, int cap) {
    if (!is_tree_poset(p)) {
        throw NotTreePosetError("poset is not a tree poset");
    }
    if (p.size() > cap) {
        throw LimitError("poset size " + std::to_string(p.size()) +
                         " exceeds the recognition cap " +
                         std::to_string(cap));
    }
    const int n = p.size();
    if (n == 0) {
        return MobileMatch{MobileSpec{}, PathFolds{}, {}};
    }
    if (n == 1) {
        MobileSpec spec;
        spec.ribbon_size = 1;
        return MobileMatch{std::move(spec), PathFolds{}, {0}};
    }

    std::vector<std::vector<int>> adjacent(n);
    for (const auto& c : p.covers()) {
        adjacent[c.lower].push_back(c.upper);
        adjacent[c.upper].push_back(c.lower);
    }

    auto tree_path = [&](int u, int v) {
        std::vector<int> parent(n, -2);
        parent[u] = -1;
        std::vector<int> stack{u};
        while (!stack.empty()) {
            int w = stack.back();
            stack.pop_back();
            for (int x : adjacent[w]) {
                if (parent[x] == -2) {
                    parent[x] = w;
                    stack.push_back(x);
                }
            }
        }
        std::vector<int> path;
        for (int w = v; w != -1; w = parent[w]) {
            path.push_back(w);
        }
        std::reverse(path.begin(), path.end());
        return path;
    };

    auto subtree_from = [&](int root, int barrier) {
        std::vector<int> elems;
        std::vector<int> stack{root};
        std::vector<bool> seen(n, false);
        seen[root] = true;
        seen[barrier] = true;
        while (!stack.empty()) {
            int w = stack.back();
            stack.pop_back();
            elems.push_back(w);
            for (int x : adjacent[w]) {
                if (!seen[x]) {
                    seen[x] = true;
                    stack.push_back(x);
                }
            }
        }
        return elems;
    };

    auto attempt = [&](const std::vector<int>& path)
        -> std::optional<MobileMatch> {
        const int len = static_cast<int>(path.size());
        MobileSpec spec;
        spec.ribbon_size = len;
        spec.hangers.resize(len);
        for (int i = 1; i < len; ++i) {
            if (p.is_cover(path[i], path[i - 1])) {
                spec.descents.push_back(i);
            }
        }

        for (int t = 0; t < len; ++t) {
            const int w = path[t];
            const int prev = t > 0 ? path[t - 1] : -1;
            const int next = t + 1 < len ? path[t + 1] : -1;
            for (int x : adjacent[w]) {
                if (x == prev || x == next) {
                    continue;
                }
                auto [sub, elems] = p.induced(subtree_from(x, w));
                if (!is_rooted_tree_poset(sub)) {
                    return std::nullopt;
                }
                const int local = static_cast<int>(
                    std::lower_bound(elems.begin(), elems.end(), x) -
                    elems.begin());
                if (p.is_cover(x, w)) {
                    if (sub.maximal_elements().front() != local) {
                        return std::nullopt;
                    }
                    spec.hangers[t].push_back(std::move(sub));
                } else {
                    if (!spec.anchors.empty()) {
                        return std::nullopt;
                    }
                    spec.anchors.push_back({t + 1, std::move(sub), local});
                }
            }
        }

        PathFolds folds;
        folds.anchor_position =
            spec.anchors.empty() ? 0 : spec.anchors.front().position;
        for (int i = 1; i < len; ++i) {
            const bool descent = std::binary_search(
                spec.descents.begin(), spec.descents.end(), i);
            if (folds.anchor_position == 0) {
                if (descent) {
                    folds.folds.push_back({path[i], path[i - 1]});
                }
            } else if (descent && i < folds.anchor_position) {
                folds.folds.push_back({path[i], path[i - 1]});
            } else if (!descent && i >= folds.anchor_position) {
                folds.folds.push_back({path[i - 1], path[i]});
            }
        }

        if (!is_rooted_tree_poset(fold(p, folds.folds))) {
            return std::nullopt;
        }
        if (path_orders(component_tree(p, folds.folds)).empty()) {
            return std::nullopt;
        }
        return MobileMatch{std::move(spec), std::move(folds), path};
    };

    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (u == v) {
                continue;
            }
            if (auto match = attempt(tree_path(u, v))) {
                return match;
            }
        }
    }
    return std::nullopt;
}

MobileSpec euler_spec(EulerKind kind, int p, int k) {
    if (p < 0) {
        throw IndexError("euler family needs p >= 0");
    }
    if (k < 1) {
        throw IndexError("euler family needs k >= 1");
    }
    MobileSpec m;
    m.ribbon_size = 2 * k;
    for (int i = 2; i <= 2 * k - 2; i += 2) {
        m.descents.push_back(i);
    }
    m.hangers.resize(2 * k);
    if (p > 0) {
        for (int pos = 1; pos <= 2 * k - 1; pos += 2) {
            auto& below = m.hangers[pos - 1];
            if (kind == EulerKind::chain) {
                below.push_back(chain(p));
            } else {
                for (int t = 0; t < p; ++t) {
                    below.push_back(chain(1));
                }
            }
        }
    }
    return m;
}

EulerFamily euler_family(EulerKind kind, int p, int k) {
    MobileSpec spec = euler_spec(kind, p, k);
    return {realize(spec).poset, count_mobile(spec)};
}

Int euler_closed_form_count(EulerKind kind, int p, int k) {
    if (p < 0) {
        throw IndexError("euler family needs p >= 0");
    }
    if (k < 1) {
        throw IndexError("euler family needs k >= 1");
    }
    const Int pfact = factorial(p);
    Rat det = det_engine(k - 1, [&](int i, int j) -> Rat {
        Int denom = 1;
        for (long r = 1; r <= j - i + 1; ++r) {
            denom *= Int(r * p + 2 * r - 1) * Int(r * p + 2 * r);
            if (kind == EulerKind::chain) {
                denom *= pfact;
            }
        }
        return Rat(1, denom);
    });
    return to_integer(factorial(static_cast<long>(p + 2) * k) * det);
}

Rat DescentPolynomial::eval(const Int& n_value) const {
    Rat sum(0);
    for (std::size_t t = 0; t < coeffs.size(); ++t) {
        if (coeffs[t] != 0) {
            sum += coeffs[t] * Rat(binomial(n_value, static_cast<long>(t)));
        }
    }
    return sum;
}

std::string DescentPolynomial::to_string() const {
    std::string out;
    for (long t = static_cast<long>(coeffs.size()) - 1; t >= 0; --t) {
        const Rat& c = coeffs[t];
        if (c == 0) {
            continue;
        }
        Rat magnitude = c < 0 ? Rat(-c) : c;
        std::string term;
        if (t == 0) {
            term = magnitude.get_str();
        } else {
            if (magnitude != 1) {
                term = magnitude.get_str() + "*";
            }
            term += "C(N," + std::to_string(t) + ")";
        }
        if (out.empty()) {
            out = (c < 0 ? "-" : "") + term;
        } else {
            out += (c < 0 ? " - " : " + ") + term;
        }
    }
    return out.empty() ? "0" : out;
}

DescentPolynomial descent_polynomial(const MobileSpec& m, int extra_checks) {
    if (!m.anchors.empty()) {
        throw Error("descent polynomial requires a free-standing mobile");
    }
    if (extra_checks < 0) {
        throw IndexError("extra_checks must be nonnegative");
    }
    auto descents = validate_descents(m.ribbon_size, m.descents);
    const long last = descents.empty() ? 0 : descents.back();

    long degree = last;
    long base_size = m.ribbon_size;
    for (std::size_t pos = 0; pos < m.hangers.size(); ++pos) {
        for (const Poset& h : m.hangers[pos]) {
            base_size += h.size();
            if (static_cast<long>(pos) + 1 <= last) {
                degree += h.size();
            }
        }
    }

    auto count_at = [&](long extension) {
        MobileSpec grown = m;
        grown.ribbon_size = m.ribbon_size + static_cast<int>(extension);
        return count_mobile(grown);
    };

    std::vector<std::vector<Rat>> a;
    std::vector<Rat> rhs;
    for (long s = 0; s <= degree; ++s) {
        const Int big_n = base_size + s;
        std::vector<Rat> row;
        row.reserve(degree + 1);
        for (long t = 0; t <= degree; ++t) {
            row.emplace_back(binomial(big_n, t));
        }
        a.push_back(std::move(row));
        rhs.emplace_back(count_at(s));
    }

    DescentPolynomial poly{solve_linear(std::move(a), std::move(rhs))};
    for (long s = degree + 1; s <= degree + extra_checks; ++s) {
        const Int expected = count_at(s);
        if (poly.eval(base_size + s) != Rat(expected)) {
            throw InterpolationMismatchError(
                "verification point at ribbon extension " +
                std::to_string(s) + " disagrees with the interpolation");
        }
    }
    while (!poly.coeffs.empty() && poly.coeffs.back() == 0) {
        poly.coeffs.pop_back();
    }
    return poly;
}

}  // namespace lecount
