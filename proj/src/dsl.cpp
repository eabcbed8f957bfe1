#include "lecount/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <utility>

#include "lecount/errors.hpp"

namespace lecount {

namespace {

struct Token {
    enum class Kind { ident, number, symbol, end };
    Kind kind = Kind::end;
    std::string text;
    long value = 0;
    int line = 1;
    int column = 1;
};

std::vector<Token> lex(const std::string& text) {
    std::vector<Token> tokens;
    int line = 1;
    int column = 1;
    size_t i = 0;
    auto advance = [&](size_t by) {
        for (size_t k = 0; k < by; ++k) {
            if (text[i + k] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        i += by;
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') advance(1);
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        Token t;
        t.line = line;
        t.column = column;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < text.size() &&
                   std::isdigit(static_cast<unsigned char>(text[j])))
                ++j;
            t.kind = Token::Kind::number;
            t.text = text.substr(i, j - i);
            try {
                t.value = std::stol(t.text);
            } catch (const std::out_of_range&) {
                t.value = -1;  // kept textual; only Int consumers survive
            }
            advance(j - i);
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) ||
                    text[j] == '_' || text[j] == '.'))
                ++j;
            t.kind = Token::Kind::ident;
            t.text = text.substr(i, j - i);
            advance(j - i);
        } else if (std::string("{}=@,;:<+-^").find(c) != std::string::npos) {
            t.kind = Token::Kind::symbol;
            t.text = std::string(1, c);
            advance(1);
        } else {
            throw ParseError(line, column,
                             "unexpected character '" + std::string(1, c) +
                                 "'");
        }
        tokens.push_back(std::move(t));
    }
    Token end;
    end.line = line;
    end.column = column;
    tokens.push_back(end);
    return tokens;
}

class Parser {
  public:
    explicit Parser(const std::string& text) : tokens_(lex(text)) {}

    PosetDocument run() {
        PosetDocument doc;
        while (!at_end()) {
            const Token& t = peek();
            if (t.kind != Token::Kind::ident) {
                fail(t, "expected a statement keyword");
            }
            if (t.text == "poset") {
                parse_poset(doc);
            } else if (t.text == "labeling") {
                parse_labeling(doc);
            } else if (t.text == "mobile") {
                parse_mobile(doc);
            } else if (t.text == "check") {
                parse_check(doc);
            } else {
                fail(t, "unknown statement '" + t.text + "'");
            }
        }
        return doc;
    }

    QPoly poly_from_tokens() { return parse_poly(); }
    bool at_end() const { return peek().kind == Token::Kind::end; }

  private:
    const Token& peek(size_t ahead = 0) const {
        size_t at = std::min(pos_ + ahead, tokens_.size() - 1);
        return tokens_[at];
    }
    const Token& take() { return tokens_[std::min(pos_++, tokens_.size() - 1)]; }
    [[noreturn]] static void fail(const Token& t, const std::string& msg) {
        throw ParseError(t.line, t.column, msg);
    }
    bool is_symbol(const Token& t, const char* s) const {
        return t.kind == Token::Kind::symbol && t.text == s;
    }
    const Token& expect_symbol(const char* s) {
        const Token& t = take();
        if (!is_symbol(t, s)) {
            fail(t, std::string("expected '") + s + "', got '" + t.text + "'");
        }
        return t;
    }
    std::string expect_ident(const char* what) {
        const Token& t = take();
        if (t.kind != Token::Kind::ident) {
            fail(t, std::string("expected ") + what);
        }
        return t.text;
    }
    void expect_keyword(const char* word) {
        const Token& t = take();
        if (t.kind != Token::Kind::ident || t.text != word) {
            fail(t, std::string("expected '") + word + "'");
        }
    }
    long expect_number(const char* what) {
        const Token& t = take();
        if (t.kind != Token::Kind::number) {
            fail(t, std::string("expected ") + what);
        }
        return t.value;
    }

    const NamedPoset& lookup_poset(PosetDocument& doc) {
        const Token& t = peek();
        std::string name = expect_ident("a poset name");
        for (const NamedPoset& p : doc.posets) {
            if (p.name == name) return p;
        }
        fail(t, "unknown poset '" + name + "'");
    }

    int lookup_element(const PosetDocument& doc, const NamedPoset& p) {
        const Token& t = take();
        if (t.kind != Token::Kind::ident && t.kind != Token::Kind::number) {
            fail(t, "expected an element reference");
        }
        try {
            return doc.element(p, t.text);
        } catch (const Error& e) {
            fail(t, e.what());
        }
    }

    void check_fresh_name(const PosetDocument& doc, const Token& at,
                          const std::string& name) {
        for (const NamedPoset& p : doc.posets) {
            if (p.name == name) fail(at, "duplicate name '" + name + "'");
        }
        for (const NamedLabeling& l : doc.labelings) {
            if (l.name == name) fail(at, "duplicate name '" + name + "'");
        }
    }

    // {i, j, ...} with canonical text appended to out.
    std::vector<int> parse_int_set(std::string& out) {
        expect_symbol("{");
        out += "{";
        std::vector<int> values;
        if (!is_symbol(peek(), "}")) {
            while (true) {
                if (!values.empty()) out += ", ";
                long v = expect_number("a number");
                values.push_back(static_cast<int>(v));
                out += std::to_string(v);
                if (is_symbol(peek(), ",")) {
                    take();
                    continue;
                }
                break;
            }
        }
        expect_symbol("}");
        out += "}";
        return values;
    }

    static std::vector<std::string> index_names(int n) {
        std::vector<std::string> names;
        names.reserve(static_cast<size_t>(n));
        for (int i = 1; i <= n; ++i) names.push_back("z" + std::to_string(i));
        return names;
    }

    void parse_poset(PosetDocument& doc) {
        const Token& kw = take();  // 'poset'
        const Token& name_tok = peek();
        std::string name = expect_ident("a poset name");
        check_fresh_name(doc, name_tok, name);
        NamedPoset entry;
        entry.name = name;
        if (is_symbol(peek(), "{")) {
            parse_covers_block(doc, entry);
        } else {
            expect_symbol("=");
            parse_constructor(doc, kw, entry);
        }
        doc.posets.push_back(std::move(entry));
    }

    void parse_constructor(PosetDocument& doc, const Token& at,
                           NamedPoset& entry) {
        const Token& ctor_tok = peek();
        std::string ctor = expect_ident("a constructor");
        std::string text = "poset " + entry.name + " = ";
        try {
            if (ctor == "chain" || ctor == "antichain") {
                long n = expect_number("a size");
                entry.poset = ctor == "chain" ? chain(static_cast<int>(n))
                                              : antichain(static_cast<int>(n));
                entry.element_names = index_names(static_cast<int>(n));
                text += ctor + " " + std::to_string(n);
            } else if (ctor == "ribbon") {
                long n = expect_number("a size");
                text += "ribbon " + std::to_string(n) + " ";
                std::vector<int> descents = parse_int_set(text);
                entry.poset = ribbon(static_cast<int>(n), descents);
                entry.element_names = index_names(static_cast<int>(n));
            } else if (ctor == "slantsum") {
                const NamedPoset& under = lookup_poset(doc);
                expect_symbol("@");
                int under_elem = lookup_element(doc, under);
                expect_keyword("under");
                const NamedPoset& over = lookup_poset(doc);
                expect_symbol("@");
                int over_elem = lookup_element(doc, over);
                entry.poset =
                    slant_sum(over.poset, over_elem, under.poset, under_elem);
                entry.element_names = over.element_names;
                for (const std::string& en : under.element_names) {
                    entry.element_names.push_back(under.name + "." + en);
                }
                text += "slantsum " + under.name + "@" +
                        under.element_names[static_cast<size_t>(under_elem)] +
                        " under " + over.name + "@" +
                        over.element_names[static_cast<size_t>(over_elem)];
            } else if (ctor == "fold") {
                const NamedPoset& base = lookup_poset(doc);
                expect_symbol("{");
                std::vector<CoverPair> pairs;
                text += "fold " + base.name + " {";
                bool first = true;
                while (!is_symbol(peek(), "}")) {
                    if (!first) expect_symbol(",");
                    int x = lookup_element(doc, base);
                    expect_symbol("<");
                    int y = lookup_element(doc, base);
                    pairs.push_back({x, y});
                    if (!first) text += ", ";
                    text += base.element_names[static_cast<size_t>(x)] +
                            " < " +
                            base.element_names[static_cast<size_t>(y)];
                    first = false;
                }
                expect_symbol("}");
                text += "}";
                entry.poset = fold(base.poset, pairs);
                entry.element_names = base.element_names;
            } else {
                fail(ctor_tok, "unknown constructor '" + ctor + "'");
            }
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            fail(at, e.what());
        }
        entry.definition = text;
    }

    void parse_covers_block(PosetDocument& doc, NamedPoset& entry) {
        (void)doc;
        const Token& open = expect_symbol("{");
        std::vector<std::string> names;
        std::vector<std::pair<std::string, std::string>> cover_names;
        bool explicit_elements = false;
        while (!is_symbol(peek(), "}")) {
            const Token& section_tok = peek();
            std::string section = expect_ident("'elements' or 'covers'");
            expect_symbol(":");
            if (section == "elements") {
                explicit_elements = true;
                while (!is_symbol(peek(), ";")) {
                    const Token& nt = peek();
                    std::string en = expect_ident("an element name");
                    if (std::find(names.begin(), names.end(), en) !=
                        names.end()) {
                        fail(nt, "duplicate element '" + en + "'");
                    }
                    names.push_back(en);
                    if (is_symbol(peek(), ",")) take();
                }
                take();  // ';'
            } else if (section == "covers") {
                while (!is_symbol(peek(), ";")) {
                    std::string x = expect_ident("an element name");
                    expect_symbol("<");
                    std::string y = expect_ident("an element name");
                    cover_names.emplace_back(x, y);
                    if (is_symbol(peek(), ",")) take();
                }
                take();  // ';'
            } else {
                fail(section_tok, "expected 'elements' or 'covers'");
            }
        }
        expect_symbol("}");

        auto element_index = [&](const std::string& en) -> int {
            auto it = std::find(names.begin(), names.end(), en);
            if (it != names.end())
                return static_cast<int>(it - names.begin());
            if (explicit_elements) {
                fail(open, "cover uses undeclared element '" + en + "'");
            }
            names.push_back(en);
            return static_cast<int>(names.size()) - 1;
        };
        std::vector<CoverPair> pairs;
        for (const auto& [x, y] : cover_names) {
            int xi = element_index(x);
            int yi = element_index(y);
            pairs.push_back({xi, yi});
        }
        try {
            entry.poset =
                Poset::from_covers(static_cast<int>(names.size()), pairs);
        } catch (const Error& e) {
            fail(open, e.what());
        }
        entry.element_names = names;

        std::string text = "poset " + entry.name + " {";
        if (!names.empty()) {
            text += " elements: ";
            for (size_t k = 0; k < names.size(); ++k) {
                if (k > 0) text += ", ";
                text += names[k];
            }
            text += ";";
        }
        if (!cover_names.empty()) {
            text += " covers: ";
            for (size_t k = 0; k < cover_names.size(); ++k) {
                if (k > 0) text += ", ";
                text += cover_names[k].first + " < " + cover_names[k].second;
            }
            text += ";";
        }
        text += " }";
        entry.definition = text;
    }

    void parse_labeling(PosetDocument& doc) {
        take();  // 'labeling'
        const Token& name_tok = peek();
        std::string name = expect_ident("a labeling name");
        check_fresh_name(doc, name_tok, name);
        expect_keyword("on");
        const NamedPoset& target = lookup_poset(doc);
        const Token& open = expect_symbol("{");
        std::vector<int> omega(target.poset.size(), 0);
        std::vector<bool> seen(target.poset.size(), false);
        while (!is_symbol(peek(), "}")) {
            const Token& et = peek();
            int elem = lookup_element(doc, target);
            if (seen[static_cast<size_t>(elem)]) {
                fail(et, "element '" + et.text + "' labeled twice");
            }
            seen[static_cast<size_t>(elem)] = true;
            expect_symbol(":");
            omega[static_cast<size_t>(elem)] =
                static_cast<int>(expect_number("a label"));
            if (is_symbol(peek(), ",")) take();
        }
        expect_symbol("}");
        for (size_t k = 0; k < seen.size(); ++k) {
            if (!seen[k]) {
                fail(open, "element '" + target.element_names[k] +
                               "' has no label");
            }
        }
        try {
            validate_labeling({target.poset, omega});
        } catch (const Error& e) {
            fail(open, e.what());
        }

        NamedLabeling entry;
        entry.name = name;
        entry.poset_name = target.name;
        entry.omega = omega;
        std::string text =
            "labeling " + name + " on " + target.name + " { ";
        for (size_t k = 0; k < omega.size(); ++k) {
            if (k > 0) text += ", ";
            text += target.element_names[k] + ": " + std::to_string(omega[k]);
        }
        text += " }";
        entry.definition = text;
        doc.labelings.push_back(std::move(entry));
    }

    void parse_mobile(PosetDocument& doc) {
        const Token& kw = take();  // 'mobile'
        const Token& name_tok = peek();
        std::string name = expect_ident("a mobile name");
        check_fresh_name(doc, name_tok, name);
        expect_symbol("{");
        expect_keyword("ribbon");
        MobileSpec spec;
        spec.ribbon_size = static_cast<int>(expect_number("a ribbon size"));
        std::string set_text;
        spec.descents = parse_int_set(set_text);
        spec.hangers.resize(static_cast<size_t>(spec.ribbon_size));
        expect_symbol(";");

        // Source poset names per hanger slot and for the anchor, for the
        // canonical text and realized element names.
        std::vector<std::vector<const NamedPoset*>> hanger_refs(
            static_cast<size_t>(spec.ribbon_size));
        const NamedPoset* anchor_ref = nullptr;
        std::string anchor_text;
        while (!is_symbol(peek(), "}")) {
            const Token& st = peek();
            std::string stmt = expect_ident("'hang' or 'anchor'");
            if (stmt == "hang") {
                const NamedPoset& hp = lookup_poset(doc);
                expect_keyword("under");
                long position = ribbon_position(spec.ribbon_size);
                spec.hangers[static_cast<size_t>(position - 1)].push_back(
                    hp.poset);
                hanger_refs[static_cast<size_t>(position - 1)].push_back(&hp);
            } else if (stmt == "anchor") {
                const NamedPoset& ap = lookup_poset(doc);
                expect_symbol("@");
                int elem = lookup_element(doc, ap);
                expect_keyword("at");
                long position = ribbon_position(spec.ribbon_size);
                spec.anchors.push_back(
                    {static_cast<int>(position), ap.poset, elem});
                anchor_ref = &ap;
                anchor_text =
                    "anchor " + ap.name + "@" +
                    ap.element_names[static_cast<size_t>(elem)] + " at z" +
                    std::to_string(position) + "; ";
            } else {
                fail(st, "expected 'hang' or 'anchor'");
            }
            expect_symbol(";");
        }
        expect_symbol("}");

        NamedPoset entry;
        entry.name = name;
        entry.mobile = spec;
        RealizedMobile rm;
        try {
            rm = realize(spec);
        } catch (const Error& e) {
            fail(kw, e.what());
        }
        entry.poset = rm.poset;
        entry.element_names.resize(static_cast<size_t>(rm.poset.size()));
        for (size_t i = 0; i < rm.ribbon.size(); ++i) {
            entry.element_names[static_cast<size_t>(rm.ribbon[i])] =
                "z" + std::to_string(i + 1);
        }
        int ordinal = 0;
        std::string hang_text;
        for (size_t pos = 0; pos < rm.hangers.size(); ++pos) {
            for (size_t idx = 0; idx < rm.hangers[pos].size(); ++idx) {
                ++ordinal;
                const NamedPoset* src = hanger_refs[pos][idx];
                hang_text += "hang " + src->name + " under z" +
                             std::to_string(pos + 1) + "; ";
                const std::vector<int>& placed = rm.hangers[pos][idx];
                for (size_t s = 0; s < placed.size(); ++s) {
                    entry.element_names[static_cast<size_t>(placed[s])] =
                        "h" + std::to_string(ordinal) + "." +
                        src->element_names[s];
                }
            }
        }
        for (size_t s = 0; s < rm.anchor.size(); ++s) {
            entry.element_names[static_cast<size_t>(rm.anchor[s])] =
                "q." + anchor_ref->element_names[s];
        }

        entry.definition = "mobile " + name + " { ribbon " +
                           std::to_string(spec.ribbon_size) + " " + set_text +
                           "; " + hang_text + anchor_text + "}";
        doc.posets.push_back(std::move(entry));
    }

    // z<i> reference or 1-based number naming a ribbon position.
    long ribbon_position(int ribbon_size) {
        const Token& t = take();
        long position = 0;
        if (t.kind == Token::Kind::ident && t.text.size() > 1 &&
            t.text[0] == 'z' &&
            std::all_of(t.text.begin() + 1, t.text.end(), [](char c) {
                return std::isdigit(static_cast<unsigned char>(c));
            })) {
            position = std::stol(t.text.substr(1));
        } else if (t.kind == Token::Kind::number) {
            position = t.value;
        } else {
            fail(t, "expected a ribbon position z1..z" +
                        std::to_string(ribbon_size));
        }
        if (position < 1 || position > ribbon_size) {
            fail(t, "ribbon position " + t.text + " outside z1..z" +
                        std::to_string(ribbon_size));
        }
        return position;
    }

    void parse_check(PosetDocument& doc) {
        take();  // 'check'
        const Token& kind_tok = peek();
        std::string kind = expect_ident("'count' or 'qcount'");
        DocumentCheck check;
        if (kind == "count") {
            const NamedPoset& p = lookup_poset(doc);
            check.kind = DocumentCheck::Kind::count;
            check.target = p.name;
            expect_symbol("=");
            const Token& vt = take();
            if (vt.kind != Token::Kind::number) {
                fail(vt, "expected an expected count");
            }
            check.expected_count = Int(vt.text);
            check.definition =
                "check count " + p.name + " = " + vt.text;
        } else if (kind == "qcount") {
            const Token& stat_tok = peek();
            std::string stat = expect_ident("'maj' or 'inv'");
            if (stat == "maj") {
                check.stat = Stat::maj;
            } else if (stat == "inv") {
                check.stat = Stat::inv;
            } else {
                fail(stat_tok, "expected 'maj' or 'inv'");
            }
            const Token& lt = peek();
            std::string lname = expect_ident("a labeling name");
            bool found = false;
            for (const NamedLabeling& l : doc.labelings) {
                if (l.name == lname) found = true;
            }
            if (!found) fail(lt, "unknown labeling '" + lname + "'");
            check.kind = DocumentCheck::Kind::qcount;
            check.target = lname;
            expect_symbol("=");
            check.expected_poly = parse_poly();
            check.definition = "check qcount " + stat + " " + lname + " = " +
                               check.expected_poly.to_string();
        } else {
            fail(kind_tok, "expected 'count' or 'qcount'");
        }
        doc.checks.push_back(std::move(check));
    }

    // [-] term ((+|-) term)*, term = coefficient, q power, or both.
    QPoly parse_poly() {
        QPoly result;
        bool negative = false;
        if (is_symbol(peek(), "-")) {
            take();
            negative = true;
        }
        while (true) {
            result += parse_poly_term(negative);
            if (is_symbol(peek(), "+")) {
                take();
                negative = false;
            } else if (is_symbol(peek(), "-")) {
                take();
                negative = true;
            } else {
                break;
            }
        }
        return result;
    }

    QPoly parse_poly_term(bool negative) {
        const Token& t = take();
        Int coeff = 1;
        bool have_coeff = false;
        if (t.kind == Token::Kind::number) {
            coeff = Int(t.text);
            have_coeff = true;
        }
        long exponent = 0;
        const Token& qt = have_coeff ? peek() : t;
        bool have_q = qt.kind == Token::Kind::ident && qt.text == "q";
        if (have_coeff && have_q) take();
        if (!have_coeff && !have_q) {
            fail(t, "expected a polynomial term");
        }
        if (have_q) {
            exponent = 1;
            if (is_symbol(peek(), "^")) {
                take();
                exponent = expect_number("an exponent");
            }
        }
        if (negative) coeff = -coeff;
        return QPoly::monomial(exponent, coeff);
    }

    std::vector<Token> tokens_;
    size_t pos_ = 0;
};

}  // namespace

const NamedPoset& PosetDocument::poset(const std::string& name) const {
    for (const NamedPoset& p : posets) {
        if (p.name == name) return p;
    }
    throw Error("unknown poset '" + name + "'");
}

const NamedLabeling& PosetDocument::labeling(const std::string& name) const {
    for (const NamedLabeling& l : labelings) {
        if (l.name == name) return l;
    }
    throw Error("unknown labeling '" + name + "'");
}

int PosetDocument::element(const NamedPoset& p, const std::string& ref) const {
    for (size_t i = 0; i < p.element_names.size(); ++i) {
        if (p.element_names[i] == ref) return static_cast<int>(i);
    }
    if (!ref.empty() && std::all_of(ref.begin(), ref.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
        })) {
        try {
            long idx = std::stol(ref);
            if (idx >= 0 && idx < p.poset.size())
                return static_cast<int>(idx);
        } catch (const std::out_of_range&) {
        }
    }
    throw Error("poset '" + p.name + "' has no element '" + ref + "'");
}

PosetDocument parse_document(const std::string& text) {
    return Parser(text).run();
}

std::string to_text(const PosetDocument& doc) {
    // Posets first, then labelings, then checks keeps every reference
    // ahead of its use regardless of the original interleaving.
    std::string out;
    for (const NamedPoset& p : doc.posets) out += p.definition + "\n";
    for (const NamedLabeling& l : doc.labelings) out += l.definition + "\n";
    for (const DocumentCheck& c : doc.checks) out += c.definition + "\n";
    return out;
}

QPoly parse_qpoly(const std::string& text) {
    Parser parser(text);
    QPoly p = parser.poly_from_tokens();
    if (!parser.at_end()) {
        throw ParseError(1, 1, "trailing input after polynomial");
    }
    return p;
}

std::string emit_dot(const Poset& p, const std::vector<std::string>& names,
                     const std::vector<CoverPair>& highlights,
                     const std::string& graph_name) {
    auto name_of = [&](int i) -> std::string {
        if (static_cast<size_t>(i) < names.size())
            return names[static_cast<size_t>(i)];
        return std::to_string(i);
    };
    std::ostringstream out;
    out << "digraph \"" << graph_name << "\" {\n";
    out << "  rankdir=BT;\n";
    for (int i = 0; i < p.size(); ++i) {
        out << "  n" << i << " [label=\"" << name_of(i) << "\"];\n";
    }
    for (const CoverPair& c : p.covers()) {
        out << "  n" << c.lower << " -> n" << c.upper;
        if (std::find(highlights.begin(), highlights.end(), c) !=
            highlights.end()) {
            out << " [style=bold]";
        }
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace lecount
