#include "lecount/qdet.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "lecount/dcomplete.hpp"
#include "lecount/errors.hpp"
#include "lecount/folding.hpp"
#include "lecount/mobile.hpp"
#include "lecount/oracle.hpp"

using namespace lecount;

namespace {

Poset wedge() { return Poset::from_covers(3, {{0, 2}, {1, 2}}); }

MobileSpec hanger_240_spec() {
    MobileSpec m;
    m.ribbon_size = 5;
    m.descents = {1, 3};
    m.hangers.resize(5);
    m.hangers[3].push_back(
        Poset::from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
    m.anchors.push_back({3, chain(1), 0});
    return m;
}

MobileSpec star_12_spec() {
    MobileSpec m;
    m.ribbon_size = 3;
    m.descents = {1};
    m.hangers.resize(3);
    m.hangers[1].push_back(chain(1));
    m.hangers[1].push_back(chain(1));
    m.anchors.push_back({2, chain(1), 0});
    return m;
}

std::vector<int> natural_labeling(const Poset& p) {
    std::vector<int> omega(p.size(), 0);
    const auto ext = linear_extensions(p, p.size());
    for (int t = 0; t < p.size(); ++t) {
        omega[ext.front()[t]] = t + 1;
    }
    return omega;
}

std::vector<int> random_labeling(const Poset& p, std::mt19937& rng) {
    std::vector<int> omega(p.size());
    std::iota(omega.begin(), omega.end(), 1);
    std::shuffle(omega.begin(), omega.end(), rng);
    return omega;
}

MobileSpec random_tree_spec(std::mt19937& rng, int max_total) {
    const std::vector<Poset> pool{chain(1), chain(2), chain(3), wedge()};
    MobileSpec m;
    m.ribbon_size = 1 + static_cast<int>(rng() % 4);
    for (int i = 1; i < m.ribbon_size; ++i) {
        if (rng() % 2 == 0) {
            m.descents.push_back(i);
        }
    }
    m.hangers.resize(m.ribbon_size);
    int budget = max_total - m.ribbon_size;
    for (int tries = 0; tries < 3; ++tries) {
        const Poset& h = pool[rng() % pool.size()];
        if (h.size() <= budget && rng() % 2 == 0) {
            m.hangers[rng() % m.ribbon_size].push_back(h);
            budget -= h.size();
        }
    }
    if (budget > 0 && rng() % 2 == 0) {
        const Poset& q = pool[rng() % pool.size()];
        if (q.size() <= budget) {
            auto acyclic = acyclic_elements(q);
            m.anchors.push_back(
                {1 + static_cast<int>(rng() % m.ribbon_size), q,
                 acyclic[rng() % acyclic.size()]});
        }
    }
    return m;
}

Poset random_rooted_tree(std::mt19937& rng, int n) {
    std::vector<CoverPair> covers;
    for (int i = 1; i < n; ++i) {
        covers.push_back({i, static_cast<int>(rng() % i)});
    }
    return Poset::from_covers(n, covers);
}

}  // namespace

TEST_CASE("q determinant engine handles signs and denominators") {
    auto entry = [](int i, int j) {
        if (i == 0 && j == 0) {
            return QDetEntry{QPoly(), {}};
        }
        return QDetEntry{QPoly(1), {}};
    };
    CHECK(q_det_count(0, 1, entry) == -QPoly(1));

    // Single entry 1/[2]_q with n = 2 reduces to [2]_q!/[2]_q = 1.
    auto single = [](int, int) { return QDetEntry{QPoly(1), {2}}; };
    CHECK(q_det_count(2, 0, single) == QPoly(1));
}

TEST_CASE("ribbon q determinant matches the inversion oracle") {
    const std::vector<std::pair<int, std::vector<int>>> ribbons{
        {6, {3, 5}}, {3, {2}}, {5, {2, 3}}, {7, {1, 4, 6}}, {4, {1}}};
    for (const auto& [n, s] : ribbons) {
        Poset z = ribbon(n, s);
        std::vector<int> eta(n);
        std::iota(eta.begin(), eta.end(), 1);
        QPoly det = q_macmahon_inv(n, s);
        CHECK(det == stat_generating_poly({z, eta}, Stat::inv));
        CHECK(det.eval_at_one() == macmahon_count(n, s));
    }
}

TEST_CASE("subtree-consecutive labelings of rooted trees are regular") {
    std::mt19937 rng(77001);
    for (int trial = 0; trial < 30; ++trial) {
        Poset t = random_rooted_tree(rng, 2 + static_cast<int>(rng() % 9));
        LabeledPoset lp{t, regular_tree_labeling(t)};
        validate_labeling(lp);
        CAPTURE(trial);
        CHECK(is_regular(lp));
    }
    CHECK_THROWS_AS(
        regular_tree_labeling(
            Poset::from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}})),
        NotRootedTreeError);
}

TEST_CASE("generated component labelings are partitioned and regular") {
    MobileSpec m = star_12_spec();
    LabeledPoset lp = sigma_partitioned_regular_labeling(m);
    CHECK(lp.omega == std::vector<int>{1, 4, 6, 2, 3, 5});
    CHECK(is_regular(lp));

    CHECK_THROWS_AS(sigma_partitioned_regular_labeling(hanger_240_spec()),
                    NotMobileTreeError);
}

TEST_CASE("major index determinant reproduces the published polynomial") {
    // Star mobile labeled a:1 b:3 c:6 d:4 e:2 f:5.
    QPoly maj = q_maj_det(star_12_spec(), {1, 4, 6, 2, 5, 3});
    QPoly expected;
    const long coeffs[] = {0, 0, 0, 0, 1, 2, 1, 0, 1, 3, 3, 1};
    for (long e = 0; e < 12; ++e) {
        expected += QPoly::monomial(e, coeffs[e]);
    }
    CHECK(maj == expected);
    CHECK(maj.eval_at_one() == 12);

    LabeledPoset lp{realize(star_12_spec()).poset, {1, 4, 6, 2, 5, 3}};
    CHECK(maj == stat_generating_poly(lp, Stat::maj));
}

TEST_CASE("major index entries carry descents of the folded poset") {
    MobileSpec m = hanger_240_spec();
    const std::vector<int> omega{7, 5, 8, 6, 9, 1, 2, 3, 4, 10};

    RealizedMobile r = realize(m);
    ComponentArray array =
        component_array(r.poset, path_folds(m).folds, {0, 1, 2});
    auto exponent = [&](int i, int j) {
        const auto& e = array.entry(i, j);
        std::vector<int> labels;
        for (int x : e.elements) {
            labels.push_back(omega[x]);
        }
        return hook_major_index({e.poset, standardize_labels(labels)});
    };
    CHECK(exponent(0, 0) == 0);
    CHECK(exponent(1, 1) == 0);
    CHECK(exponent(2, 2) == 0);
    CHECK(exponent(0, 1) == 1);
    CHECK(exponent(1, 2) == 1);
    CHECK(exponent(0, 2) == 2);

    QPoly det = q_maj_det(m, omega);
    CHECK(det == stat_generating_poly({r.poset, omega}, Stat::maj));
    CHECK(det.eval_at_one() == 240);
}

TEST_CASE("major index determinant agrees with the oracle on trees") {
    std::mt19937 rng(55402);

    MobileSpec star = star_12_spec();
    Poset star_poset = realize(star).poset;
    for (int trial = 0; trial < 12; ++trial) {
        std::vector<int> omega = random_labeling(star_poset, rng);
        CAPTURE(trial);
        CHECK(q_maj_det(star, omega) ==
              stat_generating_poly({star_poset, omega}, Stat::maj));
    }

    for (int trial = 0; trial < 12; ++trial) {
        MobileSpec m = random_tree_spec(rng, 8);
        Poset p = realize(m).poset;
        std::vector<int> omega = random_labeling(p, rng);
        CAPTURE(trial);
        CHECK(q_maj_det(m, omega) ==
              stat_generating_poly({p, omega}, Stat::maj));
    }
}

TEST_CASE("major index determinant agrees under natural labelings") {
    for (MobileSpec m : {hanger_240_spec(), star_12_spec()}) {
        Poset p = realize(m).poset;
        std::vector<int> omega = natural_labeling(p);
        QPoly det = q_maj_det(m, omega);
        CHECK(det == stat_generating_poly({p, omega}, Stat::maj));
        CHECK(det.eval_at_one() == count_mobile(m));
    }
}

TEST_CASE("inversion determinant reproduces the published polynomial") {
    // Star mobile labeled a:1 b:2 c:6 d:5 e:3 f:4.
    QPoly inv = q_inv_det(star_12_spec(), {1, 5, 6, 3, 4, 2});
    QPoly expected;
    const long coeffs[] = {0, 0, 0, 0, 0, 0, 1, 3, 4, 3, 1};
    for (long e = 0; e < 11; ++e) {
        expected += QPoly::monomial(e, coeffs[e]);
    }
    CHECK(inv == expected);
    CHECK(inv.eval_at_one() == 12);

    LabeledPoset lp{realize(star_12_spec()).poset, {1, 5, 6, 3, 4, 2}};
    CHECK(inv == stat_generating_poly(lp, Stat::inv));
}

TEST_CASE("inversion determinant accepts exactly partitioned labelings") {
    MobileSpec m = star_12_spec();
    CHECK_THROWS_AS(q_inv_det(m, {1, 2, 3, 4, 5, 6}),
                    NotPartitionedRegularError);
    CHECK_THROWS_AS(q_inv_det(m, {1, 6, 5, 3, 4, 2}),
                    NotPartitionedRegularError);
    CHECK_THROWS_AS(q_inv_det(hanger_240_spec(),
                              {7, 5, 8, 6, 9, 1, 2, 3, 4, 10}),
                    NotMobileTreeError);
}

TEST_CASE("inversion determinant agrees with the oracle") {
    std::mt19937 rng(90125);
    for (int trial = 0; trial < 15; ++trial) {
        MobileSpec m = random_tree_spec(rng, 8);
        LabeledPoset lp = sigma_partitioned_regular_labeling(m);
        QPoly det = q_inv_det(m, lp.omega);
        CAPTURE(trial);
        CHECK(det == stat_generating_poly(lp, Stat::inv));
        CHECK(det.eval_at_one() == count_mobile(m));
    }

    LabeledPoset gen = sigma_partitioned_regular_labeling(star_12_spec());
    QPoly det = q_inv_det(star_12_spec(), gen.omega);
    CHECK(det == stat_generating_poly(gen, Stat::inv));
}
