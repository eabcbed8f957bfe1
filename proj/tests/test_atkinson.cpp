#include "lecount/atkinson.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "lecount/errors.hpp"
#include "lecount/mobile.hpp"
#include "lecount/oracle.hpp"
#include "lecount/poset.hpp"

using namespace lecount;

namespace {

Poset diamond() {
    return Poset::from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

// Random tree on n elements: each new element covers or is covered by an
// earlier one.
Poset random_tree(std::mt19937& rng, int n) {
    std::vector<CoverPair> covers;
    for (int i = 1; i < n; ++i) {
        int parent = static_cast<int>(rng() % static_cast<unsigned>(i));
        if (rng() % 2 == 0) {
            covers.push_back({parent, i});
        } else {
            covers.push_back({i, parent});
        }
    }
    return Poset::from_covers(n, covers);
}

std::vector<QPoly> constants(const std::vector<Int>& values) {
    std::vector<QPoly> out;
    out.reserve(values.size());
    for (const Int& v : values) out.push_back(QPoly(v));
    return out;
}

std::vector<Int> at_one(const std::vector<QPoly>& spec) {
    std::vector<Int> out;
    out.reserve(spec.size());
    for (const QPoly& c : spec) out.push_back(c.eval_at_one());
    return out;
}

}  // namespace

TEST_CASE("combining single elements places them in cover order") {
    std::vector<Int> one{1};
    CHECK(atkinson_combine_lower(one, one) == std::vector<Int>{1, 0});
    CHECK(atkinson_combine_upper(one, one) == std::vector<Int>{0, 1});
}

TEST_CASE("lower combine against a two-element antichain") {
    std::vector<Int> tracked{1};
    std::vector<Int> pair{1, 1};
    CHECK(atkinson_combine_lower(tracked, pair) ==
          std::vector<Int>{2, 1, 0});
}

TEST_CASE("combines reject empty spectra") {
    std::vector<Int> one{1};
    std::vector<Int> none;
    CHECK_THROWS_AS(atkinson_combine_lower(none, one), DimensionError);
    CHECK_THROWS_AS(atkinson_combine_upper(one, none), DimensionError);
    std::vector<QPoly> qone{QPoly(1)};
    std::vector<QPoly> qnone;
    CHECK_THROWS_AS(q_atkinson_combine_lower(qnone, qone), DimensionError);
    CHECK_THROWS_AS(q_atkinson_combine_upper(qone, qnone), DimensionError);
}

TEST_CASE("q combines specialize to the integer combines at q = 1") {
    std::mt19937 rng(20240517);
    for (int trial = 0; trial < 25; ++trial) {
        int u = 1 + static_cast<int>(rng() % 4);
        int v = 1 + static_cast<int>(rng() % 4);
        std::vector<Int> alpha;
        std::vector<Int> beta;
        for (int i = 0; i < u; ++i) alpha.push_back(Int(rng() % 5));
        for (int j = 0; j < v; ++j) beta.push_back(Int(rng() % 5));
        CHECK(at_one(q_atkinson_combine_lower(constants(alpha),
                                              constants(beta))) ==
              atkinson_combine_lower(alpha, beta));
        CHECK(at_one(q_atkinson_combine_upper(constants(alpha),
                                              constants(beta))) ==
              atkinson_combine_upper(alpha, beta));
    }
}

TEST_CASE("tree counts match known values") {
    CHECK(atkinson_count(Poset::from_covers(0, {})) == 1);
    CHECK(atkinson_count(chain(1)) == 1);
    CHECK(atkinson_count(chain(5)) == 1);
    CHECK(atkinson_count(ribbon(6, {3, 5})) == 35);
    CHECK(atkinson_count(ribbon(7, {2, 5})) ==
          extension_count(ribbon(7, {2, 5})));
}

TEST_CASE("non-tree posets are rejected") {
    CHECK_THROWS_AS(atkinson_count(diamond()), NotTreePosetError);
    CHECK_THROWS_AS(atkinson_spectrum(antichain(3), 0), NotTreePosetError);
    CHECK_THROWS_AS(atkinson_spectrum(chain(3), 3), IndexError);
    CHECK_THROWS_AS(atkinson_compatible_labeling(chain(3), -1), IndexError);
}

TEST_CASE("spectra match the enumerator on random trees") {
    std::mt19937 rng(20240518);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng() % 8);
        Poset p = random_tree(rng, n);
        int a = static_cast<int>(rng() % static_cast<unsigned>(n));
        CHECK(atkinson_spectrum(p, a) == spectrum(p, a));
    }
}

TEST_CASE("spectrum of the x poset centre") {
    Poset x = Poset::from_covers(5, {{0, 2}, {1, 2}, {2, 3}, {2, 4}});
    CHECK(atkinson_spectrum(x, 2) == std::vector<Int>{0, 0, 4, 0, 0});
    CHECK(atkinson_spectrum(x, 0) == spectrum(x, 0));
}

TEST_CASE("generated labelings are bijections the q recursion accepts") {
    std::mt19937 rng(20240519);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);
        Poset p = random_tree(rng, n);
        int a = static_cast<int>(rng() % static_cast<unsigned>(n));
        std::vector<int> omega = atkinson_compatible_labeling(p, a);
        std::vector<int> sorted = omega;
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i < n; ++i) CHECK(sorted[static_cast<size_t>(i)] == i + 1);
        LabeledPoset lp{p, omega};
        std::vector<QPoly> qspec = q_atkinson_spectrum(lp, a);
        CHECK(qspec == q_spectrum(lp, a));
        CHECK(at_one(qspec) == atkinson_spectrum(p, a));
        QPoly total;
        for (const QPoly& c : qspec) total += c;
        CHECK(total == stat_generating_poly(lp, Stat::inv));
    }
}

TEST_CASE("wedge with middle label on the bottom is incompatible") {
    Poset vee = Poset::from_covers(3, {{0, 1}, {0, 2}});
    LabeledPoset lp{vee, {2, 1, 3}};
    for (int a = 0; a < 3; ++a) {
        CHECK_THROWS_AS(q_atkinson_spectrum(lp, a), IncompatibleLabelingError);
    }
    LabeledPoset ok{vee, {1, 2, 3}};
    std::vector<QPoly> spec = q_atkinson_spectrum(ok, 0);
    CHECK(spec == q_spectrum(ok, 0));
    CHECK(spec[0] == QPoly(std::vector<Int>{1, 1}));
    CHECK_THROWS_AS(q_atkinson_spectrum(ok, 1), IncompatibleLabelingError);
}

TEST_CASE("q spectrum of a labeled chain is concentrated and inversion free") {
    LabeledPoset lp{chain(4), {1, 2, 3, 4}};
    std::vector<QPoly> spec = q_atkinson_spectrum(lp, 2);
    CHECK(spec == std::vector<QPoly>{QPoly(0), QPoly(0), QPoly(1), QPoly(0)});
}
