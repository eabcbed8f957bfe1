#include "lecount/folding.hpp"

#include <algorithm>
#include <string>

#include "lecount/errors.hpp"

namespace lecount {

namespace {

std::string pair_text(const CoverPair& c) {
    return "(" + std::to_string(c.lower) + ", " + std::to_string(c.upper) +
           ")";
}

Int exact_div(const Int& a, const Int& b) {
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

ComponentTree component_tree(const Poset& p,
                             const std::vector<CoverPair>& folds) {
    if (!p.is_connected()) {
        throw NotConnectedError("poset is not connected");
    }
    for (const auto& f : folds) {
        if (!p.is_bridge(f)) {
            throw NotBridgeError("fold " + pair_text(f) +
                                 " is not a bridge cover");
        }
    }

    ComponentTree tree;
    tree.vertices = remove_covers(p, folds).components();
    std::vector<int> home(p.size(), -1);
    for (std::size_t v = 0; v < tree.vertices.size(); ++v) {
        for (int x : tree.vertices[v]) {
            home[x] = static_cast<int>(v);
        }
    }
    tree.edges.reserve(folds.size());
    for (const auto& f : folds) {
        tree.edges.emplace_back(home[f.lower], home[f.upper]);
    }
    return tree;
}

std::vector<std::vector<int>> path_orders(const ComponentTree& t) {
    const int m = static_cast<int>(t.vertices.size());
    if (m == 1) {
        return {{0}};
    }

    std::vector<std::vector<int>> adjacent(m);
    for (const auto& [a, b] : t.edges) {
        adjacent[a].push_back(b);
        adjacent[b].push_back(a);
    }
    std::vector<int> ends;
    for (int v = 0; v < m; ++v) {
        if (adjacent[v].size() > 2) {
            return {};
        }
        if (adjacent[v].size() == 1) {
            ends.push_back(v);
        }
    }
    if (ends.size() != 2) {
        return {};
    }

    auto walk = [&](int start) {
        std::vector<int> order{start};
        int prev = -1;
        int at = start;
        while (static_cast<int>(order.size()) < m) {
            int next = -1;
            for (int w : adjacent[at]) {
                if (w != prev) {
                    next = w;
                }
            }
            if (next < 0) {
                return std::vector<int>{};
            }
            order.push_back(next);
            prev = at;
            at = next;
        }
        return order;
    };

    std::vector<int> forward = walk(std::min(ends[0], ends[1]));
    if (static_cast<int>(forward.size()) != m) {
        return {};
    }
    std::vector<int> backward(forward.rbegin(), forward.rend());
    return {forward, backward};
}

ComponentArray component_array(const Poset& p,
                               const std::vector<CoverPair>& folds,
                               const std::vector<int>& order) {
    ComponentTree tree = component_tree(p, folds);
    const int m = static_cast<int>(tree.vertices.size());
    if (static_cast<int>(order.size()) != m) {
        throw IndexError("order has " + std::to_string(order.size()) +
                         " entries for " + std::to_string(m) + " components");
    }
    std::vector<bool> seen(m, false);
    for (int v : order) {
        if (v < 0 || v >= m || seen[v]) {
            throw IndexError("order is not a permutation of the components");
        }
        seen[v] = true;
    }

    ComponentArray array;
    array.k = static_cast<int>(folds.size());
    array.order = order;
    array.folded = fold(p, folds);
    array.entries.resize(m);
    for (int i = 0; i < m; ++i) {
        std::vector<int> span;
        for (int j = i; j < m; ++j) {
            const auto& comp = tree.vertices[order[j]];
            span.insert(span.end(), comp.begin(), comp.end());
            auto [sub, elems] = array.folded.induced(span);
            if (!sub.is_connected()) {
                throw NotPathOrderError(
                    "entry [" + std::to_string(i) + ", " + std::to_string(j) +
                    "] is disconnected; order is not a path order");
            }
            array.entries[i].push_back({std::move(sub), std::move(elems)});
        }
    }
    return array;
}

Rat det_engine(int k, const std::function<Rat(int, int)>& entry) {
    const int n = k + 1;
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i) {
        if (i > 0) {
            m[i][i - 1] = 1;
        }
        for (int j = i; j < n; ++j) {
            m[i][j] = entry(i, j);
        }
    }

    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    Int cleared = 1;
    for (int j = 0; j < n; ++j) {
        Int common = 1;
        for (int i = 0; i < n; ++i) {
            mpz_lcm(common.get_mpz_t(), common.get_mpz_t(),
                    m[i][j].get_den().get_mpz_t());
        }
        for (int i = 0; i < n; ++i) {
            a[i][j] = m[i][j].get_num() * exact_div(common, m[i][j].get_den());
        }
        cleared *= common;
    }

    int sign = 1;
    Int prev = 1;
    for (int r = 0; r + 1 < n; ++r) {
        if (a[r][r] == 0) {
            int swap_row = -1;
            for (int i = r + 1; i < n; ++i) {
                if (a[i][r] != 0) {
                    swap_row = i;
                    break;
                }
            }
            if (swap_row < 0) {
                return Rat(0);
            }
            std::swap(a[r], a[swap_row]);
            sign = -sign;
        }
        for (int i = r + 1; i < n; ++i) {
            for (int j = r + 1; j < n; ++j) {
                a[i][j] = exact_div(a[r][r] * a[i][j] - a[i][r] * a[r][j],
                                    prev);
            }
            a[i][r] = 0;
        }
        prev = a[r][r];
    }

    Rat det(sign * a[n - 1][n - 1], cleared);
    det.canonicalize();
    return det;
}

Int det_count(const Poset& p, const std::vector<CoverPair>& folds,
              const std::vector<int>& order,
              const std::function<Rat(const Poset&)>& evaluator) {
    ComponentArray array = component_array(p, folds, order);
    Rat det = det_engine(array.k, [&](int i, int j) {
        return evaluator(array.entry(i, j).poset);
    });
    return to_integer(factorial(p.size()) * det);
}

Int det_count(const Poset& p, const std::vector<CoverPair>& folds,
              const std::function<Rat(const Poset&)>& evaluator) {
    auto orders = path_orders(component_tree(p, folds));
    if (orders.empty()) {
        throw NotPathOrderError("component tree is not a path");
    }
    return det_count(p, folds, orders.front(), evaluator);
}

Int alternating_sum_count(const Poset& p,
                          const std::vector<CoverPair>& folds,
                          int cap) {
    if (folds.size() > 20) {
        throw LimitError("too many folds for subset enumeration");
    }
    Int total = 0;
    const std::size_t subsets = std::size_t{1} << folds.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
        std::vector<CoverPair> chosen;
        for (std::size_t b = 0; b < folds.size(); ++b) {
            if (mask >> b & 1) {
                chosen.push_back(folds[b]);
            }
        }
        Int term = extension_count(fold(p, chosen, folds), cap);
        if (chosen.size() % 2 == 0) {
            total += term;
        } else {
            total -= term;
        }
    }
    return total;
}

}  // namespace lecount
