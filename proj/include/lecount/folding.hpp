#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "lecount/numeric.hpp"
#include "lecount/oracle.hpp"
#include "lecount/poset.hpp"

namespace lecount {

// Components of P with a fold set removed, plus one edge per fold pair
// joining the components of its endpoints. Vertices are sorted element
// lists ordered by smallest element; edges index into vertices and are
// listed in fold order.
struct ComponentTree {
    std::vector<std::vector<int>> vertices;
    std::vector<std::pair<int, int>> edges;
};

// Requires P connected and every fold a bridge cover.
ComponentTree component_tree(const Poset& p,
                             const std::vector<CoverPair>& folds);

// End-to-end traversals when the tree is a path: two orders (the one
// starting at the smaller endpoint first), a single order for one
// vertex, and none otherwise.
std::vector<std::vector<int>> path_orders(const ComponentTree& t);

// Triangular array of induced subposets of the folded poset: entry
// [i,j] spans the components at order positions i..j.
struct ComponentArray {
    struct Entry {
        Poset poset;
        std::vector<int> elements;  // new index -> element of P
    };

    int k = 0;
    std::vector<int> order;
    Poset folded;
    std::vector<std::vector<Entry>> entries;  // entries[i][j-i], j >= i

    const Entry& entry(int i, int j) const { return entries[i][j - i]; }
};

// Builds the array for the given traversal order; every entry must be
// connected (NotPathOrderError otherwise).
ComponentArray component_array(const Poset& p,
                               const std::vector<CoverPair>& folds,
                               const std::vector<int>& order);

// Determinant of the (k+1)x(k+1) matrix with entry(i,j) above the
// sub-diagonal, 1 on the sub-diagonal and 0 below it. Clears each column
// to an integer multiple, runs fraction-free elimination, divides at the
// end.
Rat det_engine(int k, const std::function<Rat(int, int)>& entry);

// n! times the array determinant, with entries evaluated by the given
// extension-density function. Throws NonIntegralError if the result is
// not an integer. The two-argument form uses the first path order.
Int det_count(const Poset& p, const std::vector<CoverPair>& folds,
              const std::vector<int>& order,
              const std::function<Rat(const Poset&)>& evaluator);
Int det_count(const Poset& p, const std::vector<CoverPair>& folds,
              const std::function<Rat(const Poset&)>& evaluator);

// Inclusion-exclusion over fold subsets, each term counted by the
// oracle: sum of (-1)^|S| e(P_{S,F}).
Int alternating_sum_count(const Poset& p,
                          const std::vector<CoverPair>& folds,
                          int cap = kOracleCap);

}  // namespace lecount
