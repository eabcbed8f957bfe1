#include <vector>

#include "doctest.h"
#include "lecount/labeling.hpp"
#include "lecount/poset.hpp"

using namespace lecount;

TEST_CASE("chain basics") {
    Poset p = chain(4);
    CHECK(p.size() == 4);
    CHECK(p.covers() ==
          std::vector<CoverPair>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(p.less(0, 3));
    CHECK(!p.less(3, 0));
    CHECK(p.leq(2, 2));
    CHECK(p.minimal_elements() == std::vector<int>{0});
    CHECK(p.maximal_elements() == std::vector<int>{3});
    CHECK(p.below(2) == std::vector<int>{0, 1});
    CHECK(p.above(2) == std::vector<int>{3});
}

TEST_CASE("construction reduces to covers") {
    Poset p = Poset::from_covers(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(p.covers() == std::vector<CoverPair>{{0, 1}, {1, 2}});
    CHECK(p.is_cover(0, 1));
    CHECK(!p.is_cover(0, 2));
}

TEST_CASE("construction rejects bad input") {
    CHECK_THROWS_AS(Poset::from_covers(2, {{0, 1}, {1, 0}}), CycleError);
    CHECK_THROWS_AS(Poset::from_covers(2, {{0, 0}}), CycleError);
    CHECK_THROWS_AS(Poset::from_covers(2, {{0, 2}}), IndexError);
    CHECK_THROWS_AS(
        Poset::from_covers(3, {{0, 1}, {1, 2}, {2, 0}}), CycleError);
}

TEST_CASE("components and connectivity") {
    CHECK(antichain(3).components() ==
          std::vector<std::vector<int>>{{0}, {1}, {2}});
    Poset two_chains = disjoint_sum(chain(2), chain(2));
    CHECK(two_chains.components() ==
          std::vector<std::vector<int>>{{0, 1}, {2, 3}});
    CHECK(!two_chains.is_connected());
    CHECK(chain(5).is_connected());
    CHECK(chain(0).is_connected());
}

TEST_CASE("adding relations") {
    Poset p = add_relations(antichain(2), {{0, 1}});
    CHECK(p.less(0, 1));
    CHECK_THROWS_AS(add_relations(chain(2), {{0, 1}}), ComparableError);
    CHECK_THROWS_AS(add_relations(chain(2), {{1, 0}}), ComparableError);
    CHECK_THROWS_AS(add_relations(antichain(2), {{0, 0}}), ComparableError);
    // Jointly inconsistent pairs pass the pairwise check but cycle.
    CHECK_THROWS_AS(add_relations(antichain(2), {{0, 1}, {1, 0}}),
                    CycleError);
}

TEST_CASE("removing covers") {
    Poset p = remove_covers(chain(3), {{0, 1}});
    CHECK(!p.comparable(0, 1));
    CHECK(p.less(1, 2));
    CHECK_THROWS_AS(remove_covers(chain(3), {{0, 2}}), NotACoverError);
}

TEST_CASE("folding reverses covers") {
    Poset p = fold(chain(3), {{0, 1}});
    CHECK(p.less(1, 0));
    CHECK(p.less(1, 2));
    CHECK(!p.comparable(0, 2));

    // Partial reversal: remove both covers, reverse only one.
    Poset q = fold(chain(3), {{0, 1}}, {{0, 1}, {1, 2}});
    CHECK(q.less(1, 0));
    CHECK(!q.comparable(1, 2));

    CHECK_THROWS_AS(fold(chain(3), {{1, 2}}, {{0, 1}}), NotACoverError);
    CHECK_THROWS_AS(fold(chain(3), {{0, 2}}), NotACoverError);
}

TEST_CASE("slant sum hangs below") {
    Poset p = slant_sum(chain(2), 0, chain(1), 0);
    CHECK(p.size() == 3);
    CHECK(p.less(2, 0));
    CHECK(p.less(2, 1));
    CHECK(p.less(0, 1));
    CHECK_THROWS_AS(slant_sum(chain(2), 5, chain(1), 0), IndexError);
}

TEST_CASE("bridges") {
    Poset diamond =
        Poset::from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    CHECK(!diamond.is_bridge({0, 1}));
    CHECK(chain(3).is_bridge({0, 1}));
    CHECK(chain(3).is_bridge({1, 2}));
    CHECK_THROWS_AS(chain(3).is_bridge({0, 2}), NotACoverError);
}

TEST_CASE("induced subposets and intervals") {
    auto [sub, elems] = chain(4).induced({3, 0, 2});
    CHECK(elems == std::vector<int>{0, 2, 3});
    CHECK(sub.size() == 3);
    CHECK(sub.covers() == std::vector<CoverPair>{{0, 1}, {1, 2}});

    Poset diamond =
        Poset::from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    auto [whole, we] = diamond.interval(0, 3);
    CHECK(whole.size() == 4);
    CHECK(we == std::vector<int>{0, 1, 2, 3});
    auto [empty, ee] = diamond.interval(1, 2);
    CHECK(empty.size() == 0);
    CHECK(ee.empty());
}

TEST_CASE("labelings") {
    LabeledPoset natural{chain(3), {1, 2, 3}};
    CHECK(is_natural(natural));
    CHECK(is_regular(natural));
    CHECK(labeled_inversions(natural) == 0);

    LabeledPoset swapped{chain(3), {2, 1, 3}};
    CHECK(!is_natural(swapped));
    CHECK(is_regular(swapped));
    CHECK(labeled_inversions(swapped) == 1);
    CHECK(labeled_descents(swapped) == std::vector<int>{0});

    // Label 2 sits between the labels of the comparable pair 0 < 1 but
    // its element is comparable to neither, breaking regularity.
    LabeledPoset broken{Poset::from_covers(3, {{0, 1}}), {1, 3, 2}};
    CHECK(!is_regular(broken));

    CHECK_THROWS_AS(validate_labeling({chain(2), {1, 1}}), IndexError);
    CHECK_THROWS_AS(validate_labeling({chain(2), {0, 1}}), IndexError);
    CHECK_THROWS_AS(validate_labeling({chain(2), {1}}), IndexError);

    CHECK(standardize_labels({5, 2, 9}) == std::vector<int>{2, 1, 3});
}
