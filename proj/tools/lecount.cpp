#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "lecount/atkinson.hpp"
#include "lecount/dcomplete.hpp"
#include "lecount/dsl.hpp"
#include "lecount/errors.hpp"
#include "lecount/folding.hpp"
#include "lecount/mobile.hpp"
#include "lecount/oracle.hpp"
#include "lecount/poset.hpp"
#include "lecount/qdet.hpp"

namespace {

using namespace lecount;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kInconsistent = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// "x < y, u < v" in the poset's element names or indices.
std::vector<CoverPair> parse_folds(const PosetDocument& doc,
                                   const NamedPoset& entry,
                                   const std::string& text) {
    std::vector<CoverPair> folds;
    std::istringstream in(text);
    std::string pair_text;
    auto trim = [](std::string s) {
        size_t from = s.find_first_not_of(" \t");
        size_t to = s.find_last_not_of(" \t");
        if (from == std::string::npos) return std::string();
        return s.substr(from, to - from + 1);
    };
    while (std::getline(in, pair_text, ',')) {
        size_t lt = pair_text.find('<');
        if (lt == std::string::npos) {
            throw Error("bad fold '" + pair_text + "', expected x<y");
        }
        int x = doc.element(entry, trim(pair_text.substr(0, lt)));
        int y = doc.element(entry, trim(pair_text.substr(lt + 1)));
        folds.push_back({x, y});
    }
    if (folds.empty()) throw Error("empty fold list");
    return folds;
}

Int compute_count(const PosetDocument& doc, const NamedPoset& entry,
                  const std::string& method, const std::string& folds_text,
                  int max_n) {
    if (method == "oracle") {
        return extension_count(entry.poset, max_n);
    }
    if (method == "hook") {
        return hook_count(entry.poset);
    }
    if (method == "atkinson") {
        return atkinson_count(entry.poset);
    }
    // det
    if (!folds_text.empty()) {
        std::vector<CoverPair> folds = parse_folds(doc, entry, folds_text);
        return det_count(entry.poset, folds,
                         [](const Poset& q) -> Rat { return hook_density(q); });
    }
    if (entry.mobile) {
        return count_mobile(*entry.mobile);
    }
    std::optional<MobileMatch> match = recognize_mobile_tree(entry.poset);
    if (!match) {
        throw NotMobileTreeError("poset '" + entry.name +
                                 "' is not a mobile tree poset");
    }
    return count_mobile(match->spec);
}

QPoly compute_qcount(const PosetDocument& doc, const NamedLabeling& labeling,
                     Stat stat, const std::string& method, int max_n) {
    const NamedPoset& entry = doc.poset(labeling.poset_name);
    bool use_det = method == "det" || (method == "auto" && entry.mobile);
    if (use_det) {
        if (!entry.mobile) {
            throw Error("labeling '" + labeling.name +
                        "' is not on a mobile block");
        }
        return stat == Stat::maj ? q_maj_det(*entry.mobile, labeling.omega)
                                 : q_inv_det(*entry.mobile, labeling.omega);
    }
    return stat_generating_poly({entry.poset, labeling.omega}, stat, max_n);
}

Stat parse_stat(const std::string& name) {
    if (name == "maj") return Stat::maj;
    if (name == "inv") return Stat::inv;
    throw Error("unknown statistic '" + name + "'");
}

std::string cover_text(const NamedPoset& entry, const CoverPair& c) {
    return entry.element_names[static_cast<size_t>(c.lower)] + " < " +
           entry.element_names[static_cast<size_t>(c.upper)];
}

int run_count(const std::string& file, const std::string& name,
              const std::string& method, const std::string& folds_text,
              int max_n, bool check) {
    PosetDocument doc = parse_document(read_file(file));
    const NamedPoset& entry = doc.poset(name);
    Int value = compute_count(doc, entry, method, folds_text, max_n);
    if (check) {
        Int reference = extension_count(entry.poset, max_n);
        if (value != reference) {
            std::cerr << "consistency failure: " << method << " gives "
                      << value.get_str() << ", enumeration gives "
                      << reference.get_str() << "\n";
            return kInconsistent;
        }
    }
    std::cout << value.get_str() << "\n";
    return kOk;
}

int run_qcount(const std::string& file, const std::string& name,
               const std::string& stat_name, const std::string& method,
               int max_n, bool check) {
    PosetDocument doc = parse_document(read_file(file));
    const NamedLabeling& labeling = doc.labeling(name);
    Stat stat = parse_stat(stat_name);
    QPoly value = compute_qcount(doc, labeling, stat, method, max_n);
    if (check) {
        const NamedPoset& entry = doc.poset(labeling.poset_name);
        QPoly reference =
            stat_generating_poly({entry.poset, labeling.omega}, stat, max_n);
        if (!(value == reference)) {
            std::cerr << "consistency failure: " << method << " gives "
                      << value.to_string() << ", enumeration gives "
                      << reference.to_string() << "\n";
            return kInconsistent;
        }
    }
    std::cout << value.to_string() << "\n";
    return kOk;
}

int run_spectrum(const std::string& file, const std::string& name,
                 const std::string& element, const std::string& method,
                 const std::string& labeling_name, int max_n) {
    PosetDocument doc = parse_document(read_file(file));
    const NamedPoset& entry = doc.poset(name);
    int a = doc.element(entry, element);
    std::cout.setf(std::ios::boolalpha);
    if (labeling_name.empty()) {
        std::vector<Int> spec = method == "atkinson"
                                    ? atkinson_spectrum(entry.poset, a)
                                    : spectrum(entry.poset, a, max_n);
        for (size_t i = 0; i < spec.size(); ++i) {
            if (i > 0) std::cout << " ";
            std::cout << spec[i].get_str();
        }
        std::cout << "\n";
        return kOk;
    }
    const NamedLabeling& labeling = doc.labeling(labeling_name);
    if (labeling.poset_name != entry.name) {
        throw Error("labeling '" + labeling_name + "' is not on poset '" +
                    name + "'");
    }
    LabeledPoset lp{entry.poset, labeling.omega};
    std::vector<QPoly> spec = method == "atkinson"
                                  ? q_atkinson_spectrum(lp, a)
                                  : q_spectrum(lp, a, max_n);
    for (size_t i = 0; i < spec.size(); ++i) {
        if (i > 0) std::cout << " ";
        std::cout << spec[i].to_string();
    }
    std::cout << "\n";
    return kOk;
}

int run_check_dcomplete(const std::string& file, const std::string& name,
                        int max_n) {
    PosetDocument doc = parse_document(read_file(file));
    const NamedPoset& entry = doc.poset(name);
    DCompleteCheck result = check_d_complete(entry.poset, max_n);
    if (!result.ok) {
        std::cout << "not d-complete: clause " << result.clause << ": "
                  << result.detail << "\n";
        return kOk;
    }
    std::cout << "d-complete\n";
    std::vector<long> hooks = hook_lengths(entry.poset);
    std::cout << "hooks:";
    for (long h : hooks) std::cout << " " << h;
    std::cout << "\n";
    std::cout << "count: " << hook_count(entry.poset, max_n).get_str()
              << "\n";
    return kOk;
}

int run_recognize(const std::string& file, const std::string& name,
                  int max_n) {
    PosetDocument doc = parse_document(read_file(file));
    const NamedPoset& entry = doc.poset(name);
    std::optional<MobileMatch> match =
        recognize_mobile_tree(entry.poset, max_n);
    if (!match) {
        std::cout << "not a mobile tree poset\n";
        return kOk;
    }
    std::cout << "mobile tree poset\n";
    std::cout << "ribbon:";
    for (int e : match->ribbon_elements) {
        std::cout << " " << entry.element_names[static_cast<size_t>(e)];
    }
    std::cout << "\n";
    std::cout << "folds:";
    if (match->folds.folds.empty()) std::cout << " none";
    for (size_t i = 0; i < match->folds.folds.size(); ++i) {
        std::cout << (i == 0 ? " " : ", ")
                  << cover_text(entry, match->folds.folds[i]);
    }
    std::cout << "\n";
    std::cout << "anchor position: " << match->folds.anchor_position << "\n";
    std::cout << "count: " << count_mobile(match->spec).get_str() << "\n";
    return kOk;
}

int run_euler(const std::string& kind_name, int p, const std::string& range) {
    EulerKind kind;
    if (kind_name == "chain") {
        kind = EulerKind::chain;
    } else if (kind_name == "antichain") {
        kind = EulerKind::antichain;
    } else {
        throw Error("unknown family '" + kind_name + "'");
    }
    int from = 0;
    int to = 0;
    size_t dots = range.find("..");
    try {
        if (dots == std::string::npos) {
            from = to = std::stoi(range);
        } else {
            from = std::stoi(range.substr(0, dots));
            to = std::stoi(range.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw Error("bad range '" + range + "', expected k or k1..k2");
    }
    if (from < 1 || to < from) {
        throw Error("bad range '" + range + "', expected k or k1..k2");
    }
    for (int k = from; k <= to; ++k) {
        if (k > from) std::cout << " ";
        std::cout << euler_closed_form_count(kind, p, k).get_str();
    }
    std::cout << "\n";
    return kOk;
}

int run_descent_poly(const std::string& file, const std::string& name) {
    PosetDocument doc = parse_document(read_file(file));
    const NamedPoset& entry = doc.poset(name);
    if (!entry.mobile) {
        throw Error("poset '" + name + "' is not a mobile block");
    }
    std::cout << descent_polynomial(*entry.mobile).to_string() << "\n";
    return kOk;
}

int run_dot(const std::string& file, const std::string& name,
            const std::string& format) {
    PosetDocument doc = parse_document(read_file(file));
    const NamedPoset& entry = doc.poset(name);
    std::vector<CoverPair> highlights;
    if (entry.mobile) {
        highlights = path_folds(*entry.mobile).folds;
    }
    if (format == "text") {
        std::cout << "poset " << entry.name << ": " << entry.poset.size()
                  << " elements\n";
        std::cout << "covers:";
        const std::vector<CoverPair>& covers = entry.poset.covers();
        if (covers.empty()) std::cout << " none";
        for (size_t i = 0; i < covers.size(); ++i) {
            std::cout << (i == 0 ? " " : ", ") << cover_text(entry, covers[i]);
        }
        std::cout << "\n";
        return kOk;
    }
    std::cout << emit_dot(entry.poset, entry.element_names, highlights,
                          entry.name);
    return kOk;
}

int run_verify(const std::string& file, int max_n) {
    PosetDocument doc = parse_document(read_file(file));
    if (doc.checks.empty()) {
        std::cout << "no checks in " << file << "\n";
        return kOk;
    }
    int failures = 0;
    for (const DocumentCheck& check : doc.checks) {
        if (check.kind == DocumentCheck::Kind::count) {
            const NamedPoset& entry = doc.poset(check.target);
            Int got = entry.mobile ? count_mobile(*entry.mobile)
                                   : extension_count(entry.poset, max_n);
            if (got == check.expected_count) {
                std::cout << "ok: count " << check.target << " = "
                          << got.get_str() << "\n";
            } else {
                ++failures;
                std::cout << "FAIL: count " << check.target << " expected "
                          << check.expected_count.get_str() << ", got "
                          << got.get_str() << "\n";
            }
        } else {
            const NamedLabeling& labeling = doc.labeling(check.target);
            QPoly got = compute_qcount(doc, labeling, check.stat, "auto",
                                       max_n);
            const char* stat_name = check.stat == Stat::maj ? "maj" : "inv";
            if (got == check.expected_poly) {
                std::cout << "ok: qcount " << stat_name << " "
                          << check.target << " = " << got.to_string() << "\n";
            } else {
                ++failures;
                std::cout << "FAIL: qcount " << stat_name << " "
                          << check.target << " expected "
                          << check.expected_poly.to_string() << ", got "
                          << got.to_string() << "\n";
            }
        }
    }
    std::cout << doc.checks.size() - failures << "/" << doc.checks.size()
              << " checks passed\n";
    return failures == 0 ? kOk : kInconsistent;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Linear extension counting for posets: exact counts, determinant "
        "and hook-product evaluations, q-analogues, and a small poset "
        "description language.\n"
        "Exit codes: 0 success, 1 usage or input error, 2 consistency "
        "failure."};
    app.require_subcommand(1);

    std::string file;
    std::string name;
    std::string element;
    std::string labeling;
    std::string count_method = "oracle";
    std::string qcount_method = "auto";
    std::string spectrum_method = "oracle";
    std::string stat = "maj";
    std::string format = "dot";
    std::string kind;
    std::string range;
    std::string folds_text;
    int max_n = kOracleCap;
    int recognition_cap = kRecognitionCap;
    int euler_p = 0;
    bool check = false;

    CLI::App* count = app.add_subcommand("count", "Count linear extensions");
    count->add_option("file", file, "document file")->required();
    count->add_option("poset", name, "poset name")->required();
    count->add_option("--method", count_method, "oracle|det|hook|atkinson")
        ->check(CLI::IsMember({"oracle", "det", "hook", "atkinson"}));
    count->add_option("--folds", folds_text,
                      "fold covers \"x<y, u<v\" for --method det");
    count->add_option("--max-n", max_n, "enumeration size cap");
    count->add_flag("--check", check, "verify against enumeration");

    CLI::App* qcount =
        app.add_subcommand("qcount", "Statistic generating polynomial");
    qcount->add_option("file", file, "document file")->required();
    qcount->add_option("labeling", name, "labeling name")->required();
    qcount->add_option("--stat", stat, "maj|inv")
        ->check(CLI::IsMember({"maj", "inv"}));
    qcount->add_option("--method", qcount_method, "auto|det|oracle")
        ->check(CLI::IsMember({"auto", "det", "oracle"}));
    qcount->add_option("--max-n", max_n, "enumeration size cap");
    qcount->add_flag("--check", check, "verify against enumeration");

    CLI::App* spectrum =
        app.add_subcommand("spectrum", "Extension counts by position");
    spectrum->add_option("file", file, "document file")->required();
    spectrum->add_option("poset", name, "poset name")->required();
    spectrum->add_option("element", element, "tracked element")->required();
    spectrum->add_option("--method", spectrum_method, "oracle|atkinson")
        ->check(CLI::IsMember({"oracle", "atkinson"}));
    spectrum->add_option("--labeling", labeling,
                         "weight by q^inv of this labeling");
    spectrum->add_option("--max-n", max_n, "enumeration size cap");

    CLI::App* dcomplete = app.add_subcommand(
        "check-dcomplete", "Test d-completeness and report hooks");
    dcomplete->add_option("file", file, "document file")->required();
    dcomplete->add_option("poset", name, "poset name")->required();
    dcomplete->add_option("--max-n", max_n, "scan size cap")
        ->default_val(kDCompleteCap);

    CLI::App* recognize = app.add_subcommand(
        "recognize-mobile", "Decompose a tree poset into a mobile");
    recognize->add_option("file", file, "document file")->required();
    recognize->add_option("poset", name, "poset name")->required();
    recognize->add_option("--max-n", recognition_cap, "search size cap");

    CLI::App* euler = app.add_subcommand(
        "euler", "Closed-form counts for chain/antichain hanger families");
    euler->add_option("family", kind, "chain|antichain")->required();
    euler->add_option("p", euler_p, "hanger size")->required();
    euler->add_option("range", range, "k or k1..k2")->required();

    CLI::App* descent = app.add_subcommand(
        "descent-poly", "Binomial-basis count polynomial of a grown mobile");
    descent->add_option("file", file, "document file")->required();
    descent->add_option("mobile", name, "mobile name")->required();

    CLI::App* dot = app.add_subcommand("dot", "Hasse diagram output");
    dot->add_option("file", file, "document file")->required();
    dot->add_option("poset", name, "poset name")->required();
    dot->add_option("--format", format, "dot|text")
        ->check(CLI::IsMember({"dot", "text"}));

    CLI::App* verify =
        app.add_subcommand("verify", "Run a document's check statements");
    verify->add_option("file", file, "document file")->required();
    verify->add_option("--max-n", max_n, "enumeration size cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (count->parsed()) {
            return run_count(file, name, count_method, folds_text, max_n,
                             check);
        }
        if (qcount->parsed()) {
            return run_qcount(file, name, stat, qcount_method, max_n, check);
        }
        if (spectrum->parsed()) {
            return run_spectrum(file, name, element, spectrum_method,
                                labeling, max_n);
        }
        if (dcomplete->parsed()) {
            return run_check_dcomplete(file, name, max_n);
        }
        if (recognize->parsed()) {
            return run_recognize(file, name, recognition_cap);
        }
        if (euler->parsed()) {
            return run_euler(kind, euler_p, range);
        }
        if (descent->parsed()) {
            return run_descent_poly(file, name);
        }
        if (dot->parsed()) {
            return run_dot(file, name, format);
        }
        if (verify->parsed()) {
            return run_verify(file, max_n);
        }
    } catch (const NonIntegralError& e) {
        std::cerr << "consistency failure: " << e.what() << "\n";
        return kInconsistent;
    } catch (const NonPolynomialError& e) {
        std::cerr << "consistency failure: " << e.what() << "\n";
        return kInconsistent;
    } catch (const AmbiguityError& e) {
        std::cerr << "consistency failure: " << e.what() << "\n";
        return kInconsistent;
    } catch (const InterpolationMismatchError& e) {
        std::cerr << "consistency failure: " << e.what() << "\n";
        return kInconsistent;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
