#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lecount/mobile.hpp"
#include "lecount/oracle.hpp"
#include "lecount/poset.hpp"
#include "lecount/qpoly.hpp"

namespace lecount {

// Line-oriented surface language for describing posets, labelings and
// expected results. Statements:
//
//   # comment to end of line
//   poset <name> = chain <n>
//   poset <name> = antichain <n>
//   poset <name> = ribbon <n> {<i>, ...}
//   poset <name> = slantsum <Q>@<q> under <P>@<p>
//   poset <name> = fold <P> {<x> < <y>, ...}
//   poset <name> { elements: a, b, ...; covers: a < b, ...; }
//   labeling <name> on <poset> { <elem>: <label>, ... }
//   mobile <name> { ribbon <n> {<i>, ...};
//                   hang <P> under z<i>;
//                   anchor <P>@<x> at z<j>; }
//   check count <poset> = <integer>
//   check qcount maj|inv <labeling> = <polynomial in q>
//
// Element references are the declared identifiers for explicit-cover
// posets, z1..zn for constructed posets, and always a bare 0-based
// index. Composite posets derive names: slantsum keeps the lower poset's
// names and prefixes the hung poset's with "<Q>."; fold keeps the base
// names; a realized mobile names its ribbon z1..zn, the elements of its
// k-th hanger h<k>.<source name>, and anchor elements q.<source name>.

struct NamedPoset {
    std::string name;
    Poset poset;
    std::vector<std::string> element_names;
    std::optional<MobileSpec> mobile;
    std::string definition;  // canonical statement text

    bool operator==(const NamedPoset&) const = default;
};

struct NamedLabeling {
    std::string name;
    std::string poset_name;
    std::vector<int> omega;
    std::string definition;

    bool operator==(const NamedLabeling&) const = default;
};

struct DocumentCheck {
    enum class Kind { count, qcount };
    Kind kind = Kind::count;
    Stat stat = Stat::maj;
    std::string target;  // poset name (count) or labeling name (qcount)
    Int expected_count;
    QPoly expected_poly;
    std::string definition;

    bool operator==(const DocumentCheck&) const = default;
};

struct PosetDocument {
    std::vector<NamedPoset> posets;
    std::vector<NamedLabeling> labelings;
    std::vector<DocumentCheck> checks;

    const NamedPoset& poset(const std::string& name) const;
    const NamedLabeling& labeling(const std::string& name) const;
    // Resolves an element name or 0-based index within p.
    int element(const NamedPoset& p, const std::string& ref) const;

    bool operator==(const PosetDocument&) const = default;
};

// Throws ParseError with 1-based line and column on both grammar and
// semantic violations.
PosetDocument parse_document(const std::string& text);

// Canonical rendering; parsing it back yields an equal document.
std::string to_text(const PosetDocument& doc);

// Parses QPoly::to_string output, e.g. "q^4+2q^5" or "0".
QPoly parse_qpoly(const std::string& text);

// Hasse diagram as a DOT digraph with covers pointing upward, elements
// in index order and edges in cover order; edges in `highlights` are
// drawn bold. Output is byte-stable for identical inputs.
std::string emit_dot(const Poset& p, const std::vector<std::string>& names,
                     const std::vector<CoverPair>& highlights,
                     const std::string& graph_name);

}  // namespace lecount
