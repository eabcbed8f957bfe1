#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "lecount/errors.hpp"

namespace lecount {

// A cover relation lower < upper with nothing strictly between.
struct CoverPair {
    int lower = 0;
    int upper = 0;
    auto operator<=>(const CoverPair&) const = default;
};

// Finite poset on elements 0..n-1. Immutable once built: every operation
// returns a new poset. Stores the transitive closure and the transitive
// reduction (the cover relation), both computed eagerly.
class Poset {
  public:
    Poset() = default;

    // Builds the poset generated by the given relation pairs. The pairs
    // need not be covers; the stored cover set is the transitive
    // reduction. Throws CycleError if the pairs close into a cycle and
    // IndexError on out-of-range elements.
    static Poset from_covers(int n, const std::vector<CoverPair>& pairs);

    int size() const { return n_; }
    const std::vector<CoverPair>& covers() const { return covers_; }

    bool less(int x, int y) const { return closure_[index(x, y)] != 0; }
    bool leq(int x, int y) const { return x == y || less(x, y); }
    bool comparable(int x, int y) const { return less(x, y) || less(y, x); }
    bool is_cover(int x, int y) const;

    std::vector<int> up_covers(int x) const;
    std::vector<int> down_covers(int x) const;
    std::vector<int> minimal_elements() const;
    std::vector<int> maximal_elements() const;
    // Strict down-set / up-set of x, excluding x itself, ascending.
    std::vector<int> below(int x) const;
    std::vector<int> above(int x) const;

    // Connected components of the comparability (equivalently Hasse)
    // graph, each a sorted element list; components are ordered by their
    // smallest element.
    std::vector<std::vector<int>> components() const;
    bool is_connected() const;

    // True if removing this cover from the Hasse diagram increases the
    // number of connected components. Throws NotACoverError.
    bool is_bridge(const CoverPair& c) const;

    // Induced subposet on the given elements (deduplicated, sorted).
    // Returns the subposet together with the list mapping new index ->
    // original element.
    std::pair<Poset, std::vector<int>> induced(std::vector<int> elems) const;

    // Induced subposet on {z : x <= z <= y}; empty when x is not below y.
    std::pair<Poset, std::vector<int>> interval(int x, int y) const;

    bool operator==(const Poset& o) const {
        return n_ == o.n_ && covers_ == o.covers_;
    }

  private:
    size_t index(int x, int y) const {
        check(x);
        check(y);
        return static_cast<size_t>(x) * static_cast<size_t>(n_) +
               static_cast<size_t>(y);
    }
    void check(int x) const {
        if (x < 0 || x >= n_)
            throw IndexError("element " + std::to_string(x) +
                             " outside 0.." + std::to_string(n_ - 1));
    }

    int n_ = 0;
    std::vector<CoverPair> covers_;    // sorted transitive reduction
    std::vector<unsigned char> closure_;  // n*n strict-order matrix
};

Poset chain(int n);
Poset antichain(int n);

// Disjoint union; elements of b are shifted by a.size().
Poset disjoint_sum(const Poset& a, const Poset& b);

// Adds the given relations. Each pair must relate two currently
// incomparable elements (ComparableError otherwise); jointly inconsistent
// pairs surface as CycleError.
Poset add_relations(const Poset& p, const std::vector<CoverPair>& pairs);

// Removes covers; every pair must be a cover of p (NotACoverError).
Poset remove_covers(const Poset& p, const std::vector<CoverPair>& covers);

// Removes the covers in f, then re-adds the pairs in s reversed. s must
// be a subset of f. The one-argument form reverses all of f.
Poset fold(const Poset& p, const std::vector<CoverPair>& s,
           const std::vector<CoverPair>& f);
Poset fold(const Poset& p, const std::vector<CoverPair>& f);

// Disjoint union with the extra cover attach_q < attach_p, so q hangs
// below p's element. Indices of q are shifted by p.size() in the result.
Poset slant_sum(const Poset& p, int attach_p, const Poset& q, int attach_q);

}  // namespace lecount
