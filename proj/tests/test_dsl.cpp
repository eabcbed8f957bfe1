#include "lecount/dsl.hpp"

#include <doctest.h>

#include <string>

#include "lecount/errors.hpp"
#include "lecount/mobile.hpp"
#include "lecount/oracle.hpp"
#include "lecount/poset.hpp"

using namespace lecount;

namespace {

const char* kStarDocument = R"(
# three-armed mobile fixture
poset H = chain 1
poset A = chain 1
mobile M {
  ribbon 3 {1};
  hang H under z2;
  hang H under z2;
  anchor A@z1 at z2;
}
labeling w on M { z1: 1, z2: 4, z3: 6, h1.z1: 2, h2.z1: 5, q.z1: 3 }
check count M = 12
check qcount maj w = q^4+2q^5+q^6+q^8+3q^9+3q^10+q^11
)";

}  // namespace

TEST_CASE("constructor statements build the expected posets") {
    PosetDocument doc = parse_document(
        "poset P = ribbon 6 {3,5}\n"
        "poset Q = chain 3\n"
        "poset R = slantsum Q@0 under P@2\n"
        "poset A = antichain 2\n");
    CHECK(doc.posets.size() == 4);
    CHECK(doc.poset("P").poset == ribbon(6, {3, 5}));
    CHECK(doc.poset("Q").poset == chain(3));
    CHECK(doc.poset("A").poset == antichain(2));
    const NamedPoset& r = doc.poset("R");
    CHECK(r.poset == slant_sum(ribbon(6, {3, 5}), 2, chain(3), 0));
    CHECK(r.element_names[5] == "z6");
    CHECK(r.element_names[6] == "Q.z1");
    CHECK(doc.element(r, "Q.z3") == 8);
    CHECK(doc.element(r, "4") == 4);
}

TEST_CASE("explicit cover blocks accept named elements") {
    PosetDocument doc = parse_document(
        "poset V { elements: a, b, c; covers: a < c, b < c; }\n"
        "poset W { covers: x < y, y < z; }\n"
        "labeling L on V { a: 2, b: 1, c: 3 }\n");
    const NamedPoset& v = doc.poset("V");
    CHECK(v.poset == Poset::from_covers(3, {{0, 2}, {1, 2}}));
    CHECK(doc.element(v, "b") == 1);
    CHECK(doc.poset("W").poset == chain(3));
    CHECK(doc.labeling("L").omega == std::vector<int>{2, 1, 3});
}

TEST_CASE("fold statements reverse the listed covers") {
    PosetDocument doc = parse_document(
        "poset P = ribbon 3 {}\n"
        "poset F = fold P {z1 < z2}\n");
    CHECK(doc.poset("F").poset == fold(chain(3), {{0, 1}}));
}

TEST_CASE("mobile blocks realize with stable element names") {
    PosetDocument doc = parse_document(kStarDocument);
    const NamedPoset& m = doc.poset("M");
    REQUIRE(m.mobile.has_value());
    CHECK(m.poset.size() == 6);
    CHECK(extension_count(m.poset) == 12);
    CHECK(m.element_names ==
          std::vector<std::string>{"z1", "z2", "z3", "h1.z1", "h2.z1",
                                   "q.z1"});
    CHECK(doc.labeling("w").omega == std::vector<int>{1, 4, 6, 2, 5, 3});
    REQUIRE(doc.checks.size() == 2);
    CHECK(doc.checks[0].kind == DocumentCheck::Kind::count);
    CHECK(doc.checks[0].expected_count == 12);
    CHECK(doc.checks[1].kind == DocumentCheck::Kind::qcount);
    CHECK(doc.checks[1].stat == Stat::maj);
    CHECK(doc.checks[1].expected_poly.coeff(4) == 1);
    CHECK(doc.checks[1].expected_poly.coeff(10) == 3);
}

TEST_CASE("documents round trip through the canonical rendering") {
    PosetDocument doc = parse_document(kStarDocument);
    std::string text = to_text(doc);
    PosetDocument again = parse_document(text);
    CHECK(again == doc);
    CHECK(to_text(again) == text);

    PosetDocument other = parse_document(
        "poset P = ribbon 6 {3, 5}\n"
        "poset Q = chain 3\n"
        "poset R = slantsum Q@z1 under P@z3\n"
        "poset V { elements: a, b; covers: a < b; }\n"
        "poset F = fold V {a < b}\n"
        "labeling L on V { a: 2, b: 1 }\n"
        "check count F = 1\n");
    CHECK(parse_document(to_text(other)) == other);
}

TEST_CASE("grammar and semantic violations carry positions") {
    CHECK_THROWS_AS(parse_document("poset P = ribbon 6 {7}"), ParseError);
    CHECK_THROWS_AS(parse_document("poset P ="), ParseError);
    CHECK_THROWS_AS(parse_document("poset P = widget 3"), ParseError);
    CHECK_THROWS_AS(parse_document("count P = 3"), ParseError);
    CHECK_THROWS_AS(
        parse_document("poset P = chain 2\nposet P = chain 2\n"),
        ParseError);
    CHECK_THROWS_AS(parse_document("poset P = fold Q {0 < 1}"), ParseError);
    CHECK_THROWS_AS(
        parse_document("poset P = chain 2\nlabeling L on P { z1: 1 }\n"),
        ParseError);
    CHECK_THROWS_AS(
        parse_document(
            "poset P = chain 2\nlabeling L on P { z1: 1, z1: 2 }\n"),
        ParseError);
    CHECK_THROWS_AS(
        parse_document(
            "poset P = chain 2\nlabeling L on P { z1: 1, z2: 3 }\n"),
        ParseError);
    CHECK_THROWS_AS(
        parse_document("poset V { covers: a < b, b < a; }"), ParseError);

    try {
        parse_document("poset P = chain 2\nposet Q = ribbon 3 {5}\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("polynomial text parses back to the same polynomial") {
    QPoly p = parse_qpoly("q^4+2q^5+q^6+q^8+3q^9+3q^10+q^11");
    CHECK(p.coeff(5) == 2);
    CHECK(p.coeff(11) == 1);
    CHECK(parse_qpoly(p.to_string()) == p);
    CHECK(parse_qpoly("0") == QPoly());
    CHECK(parse_qpoly("1+q") == QPoly(std::vector<Int>{1, 1}));
    CHECK(parse_qpoly("3-q^2") == QPoly(std::vector<Int>{3, 0, -1}));
    CHECK(parse_qpoly("-2q") == QPoly(std::vector<Int>{0, -2}));
    CHECK_THROWS_AS(parse_qpoly("q+"), ParseError);
    CHECK_THROWS_AS(parse_qpoly("q q"), ParseError);
}

TEST_CASE("dot output is stable and marks fold edges") {
    std::string expected =
        "digraph \"C\" {\n"
        "  rankdir=BT;\n"
        "  n0 [label=\"z1\"];\n"
        "  n1 [label=\"z2\"];\n"
        "  n0 -> n1;\n"
        "}\n";
    CHECK(emit_dot(chain(2), {"z1", "z2"}, {}, "C") == expected);
    CHECK(emit_dot(chain(2), {"z1", "z2"}, {}, "C") ==
          emit_dot(chain(2), {"z1", "z2"}, {}, "C"));

    MobileSpec spec;
    spec.ribbon_size = 6;
    spec.descents = {3, 5};
    spec.hangers.resize(6);
    PathFolds folds = path_folds(spec);
    std::string dot = emit_dot(ribbon(6, {3, 5}), {}, folds.folds, "R");
    size_t marks = 0;
    for (size_t at = dot.find("[style=bold]"); at != std::string::npos;
         at = dot.find("[style=bold]", at + 1)) {
        ++marks;
    }
    CHECK(marks == 2);
}
