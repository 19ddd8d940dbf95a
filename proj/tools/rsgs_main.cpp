// rsgs — batch interface to the right-symmetric Gröbner-Shirshov engine.
//
// Subcommands: normalize, compare, check-gs, complete, irr, envelope,
// equal, oracle.  Exit codes: 0 success / true verdict, 1 false verdict,
// 2 usage or input error, 3 resource bound hit.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rsgs/errors.hpp"
#include "rsgs/groebner.hpp"
#include "rsgs/json_io.hpp"
#include "rsgs/oracle.hpp"
#include "rsgs/parser.hpp"

namespace {

using nlohmann::json;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInputError = 2;
constexpr int kExitResourceBound = 3;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw rsgs::InvalidInputError("cannot open \"" + path + "\"");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// Ad-hoc commands take their alphabet from --generators (declaration
// order); otherwise the letters seen in the input, sorted by name.
rsgs::Alphabet alphabet_for(const std::string& generators_option,
                            const std::string& text) {
    std::vector<std::string> names;
    if (!generators_option.empty()) {
        std::stringstream ss(generators_option);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (!item.empty()) names.push_back(item);
        }
    } else {
        names = rsgs::extract_generator_names(text);
        std::sort(names.begin(), names.end());
    }
    if (names.empty()) {
        throw rsgs::InvalidInputError("no generators declared or inferred");
    }
    return rsgs::Alphabet(std::move(names));
}

// Relation-based commands accept either relation files or Lie files; the
// latter contribute their enveloping presentation.
rsgs::Presentation presentation_from(const rsgs::PresentationFile& file) {
    if (file.has_lie()) return enveloping_presentation(*file.lie);
    return file.presentation();
}

void emit(const json& report, bool as_json, const std::string& text) {
    if (as_json) {
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

json make_report(const std::string& command, const std::string& digest_input) {
    json report;
    report["command"] = command;
    report["input_digest"] = rsgs::input_digest(digest_input);
    report["result"] = json::object();
    return report;
}

json composition_json(const rsgs::CompositionReport& r,
                      const rsgs::Alphabet& alphabet) {
    json c;
    c["kind"] = r.kind == rsgs::CompositionKind::inclusion
                    ? "inclusion"
                    : "right-multiplication";
    c["f"] = r.f_index;
    c["g"] = r.g_index;
    if (r.multiplier) c["multiplier"] = to_string(*r.multiplier, alphabet);
    c["normal_form"] = to_string(r.normal_form, alphabet);
    c["trivial"] = r.trivial;
    return c;
}

std::string composition_text(const rsgs::CompositionReport& r,
                             const rsgs::Alphabet& alphabet) {
    std::ostringstream line;
    if (r.kind == rsgs::CompositionKind::inclusion) {
        line << "[inclusion] f" << r.f_index << " <- f" << r.g_index;
    } else {
        line << "[right-mult] f" << r.f_index << " * "
             << to_string(*r.multiplier, alphabet);
    }
    line << ": NF = " << to_string(r.normal_form, alphabet)
         << (r.trivial ? " (trivial)" : " (NONTRIVIAL)") << "\n";
    return line.str();
}

json degree_table_json(const std::vector<std::size_t>& dims) {
    json t = json::object();
    for (std::size_t d = 1; d <= dims.size(); ++d) {
        t[std::to_string(d)] = dims[d - 1];
    }
    return t;
}

int cmd_normalize(const std::string& expr, const std::string& generators,
                  bool as_json) {
    rsgs::Alphabet alphabet = alphabet_for(generators, expr);
    rsgs::Poly p = rsgs::parse_expression(expr, alphabet);
    std::string printed = to_string(p, alphabet);
    json report = make_report("normalize", expr);
    report["result"]["normal_form"] = printed;
    emit(report, as_json, printed + "\n");
    return kExitTrue;
}

int cmd_compare(const std::string& w1, const std::string& w2,
                const std::string& generators, bool as_json) {
    rsgs::Alphabet alphabet = alphabet_for(generators, w1 + " " + w2);
    rsgs::Word u = rsgs::parse_word(w1, alphabet);
    rsgs::Word v = rsgs::parse_word(w2, alphabet);
    auto order = compare(u, v);
    std::string verdict =
        order < 0 ? "LT" : (order > 0 ? "GT" : "EQ");
    json report = make_report("compare", w1 + "\n" + w2);
    report["result"]["order"] = verdict;
    emit(report, as_json, verdict + "\n");
    return kExitTrue;
}

int cmd_check_gs(const std::string& path, bool as_json, std::size_t cap) {
    std::string bytes = slurp(path);
    rsgs::PresentationFile file = rsgs::load_presentation_file(path);
    rsgs::Presentation S = presentation_from(file);
    rsgs::GsCheck check = is_gs(S, rsgs::Execution::parallel, cap);

    json report = make_report("check-gs", bytes);
    report["result"]["is_gs"] = check.is_basis;
    json comps = json::array();
    std::ostringstream text;
    text << "relations: " << S.size() << "\n";
    text << "compositions: " << check.reports.size() << "\n";
    for (const auto& r : check.reports) {
        comps.push_back(composition_json(r, S.alphabet()));
        text << composition_text(r, S.alphabet());
    }
    report["result"]["compositions"] = comps;
    text << "GS basis: " << (check.is_basis ? "yes" : "no") << "\n";
    emit(report, as_json, text.str());
    return check.is_basis ? kExitTrue : kExitFalse;
}

int cmd_complete(const std::string& path, std::size_t max_degree,
                 const std::string& output, bool as_json, std::size_t cap) {
    std::string bytes = slurp(path);
    rsgs::PresentationFile file = rsgs::load_presentation_file(path);
    rsgs::Presentation S = presentation_from(file);
    rsgs::CompletionResult result =
        complete(S, max_degree, rsgs::Execution::parallel, cap);
    bool completed = result.status == rsgs::CompletionStatus::complete;

    if (!output.empty()) {
        rsgs::save_presentation_file(output, result.presentation);
    }

    json report = make_report("complete", bytes);
    report["result"]["status"] = completed ? "Complete" : "BoundReached";
    report["result"]["presentation"] =
        rsgs::presentation_to_json(result.presentation);
    std::ostringstream text;
    text << "status: " << (completed ? "Complete" : "BoundReached") << "\n";
    text << "relations:\n";
    for (const rsgs::Poly& r : result.presentation.relations()) {
        text << "  " << to_string(r, S.alphabet()) << "\n";
    }
    emit(report, as_json, text.str());
    return completed ? kExitTrue : kExitFalse;
}

int cmd_irr(const std::string& path, std::size_t max_degree, bool as_json,
            std::size_t cap) {
    std::string bytes = slurp(path);
    rsgs::PresentationFile file = rsgs::load_presentation_file(path);
    rsgs::Presentation S = presentation_from(file);
    std::vector<rsgs::GoodWord> basis = irr(S, max_degree, cap);

    std::vector<std::size_t> dims(max_degree, 0);
    for (const rsgs::GoodWord& g : basis) ++dims[g.length() - 1];

    json report = make_report("irr", bytes);
    report["result"]["count"] = basis.size();
    json words = json::array();
    for (const rsgs::GoodWord& g : basis) {
        words.push_back(to_string(g, S.alphabet()));
    }
    report["result"]["words"] = words;
    report["per_degree"] = degree_table_json(dims);

    std::ostringstream text;
    for (std::size_t d = 1; d <= max_degree; ++d) {
        text << "degree " << d << ": " << dims[d - 1] << "\n";
    }
    text << "total: " << basis.size() << "\n";
    for (const rsgs::GoodWord& g : basis) {
        text << "  " << to_string(g, S.alphabet()) << "\n";
    }
    emit(report, as_json, text.str());
    return kExitTrue;
}

int cmd_envelope(const std::string& path, bool as_json, std::size_t cap) {
    std::string bytes = slurp(path);
    rsgs::PresentationFile file = rsgs::load_presentation_file(path);
    if (!file.has_lie()) {
        throw rsgs::InvalidInputError(
            "envelope requires a file with a \"lie\" table");
    }
    auto violations = validate(*file.lie);
    if (!violations.empty()) {
        std::ostringstream msg;
        msg << "invalid Lie structure constants:";
        for (const auto& v : violations) {
            msg << " [" << (v.kind == rsgs::LieViolation::Kind::antisymmetry
                                ? "antisymmetry"
                                : "jacobi")
                << " at (" << v.i + 1 << "," << v.j + 1;
            if (v.kind == rsgs::LieViolation::Kind::jacobi) msg << "," << v.k + 1;
            msg << ")]";
        }
        throw rsgs::InvalidLieError(msg.str());
    }

    rsgs::TheoremReport theorem =
        verify_theorem(*file.lie, rsgs::Execution::parallel, cap);
    rsgs::Presentation S = enveloping_presentation(*file.lie);

    json report = make_report("envelope", bytes);
    report["result"]["is_gs"] = theorem.passed;
    json comps = json::array();
    std::ostringstream text;
    text << "lie validation: ok\n";
    text << "relations: " << S.size() << "\n";
    for (const auto& r : theorem.compositions) {
        comps.push_back(composition_json(r, S.alphabet()));
        text << composition_text(r, S.alphabet());
    }
    report["result"]["compositions"] = comps;
    text << "GS basis: " << (theorem.passed ? "yes" : "no");
    if (theorem.passed) {
        text << "; compositions checked: all f_ij*e_k -> 0";
    }
    text << "\n";
    emit(report, as_json, text.str());
    return theorem.passed ? kExitTrue : kExitFalse;
}

int cmd_equal(const std::string& path, const std::string& e1,
              const std::string& e2, bool as_json, std::size_t cap) {
    std::string bytes = slurp(path);
    rsgs::PresentationFile file = rsgs::load_presentation_file(path);
    rsgs::Presentation S = presentation_from(file);
    rsgs::GsCheck check = is_gs(S, rsgs::Execution::parallel, cap);
    if (!check.is_basis) {
        throw rsgs::NotConfluentError(
            "the relations are not a Gröbner-Shirshov basis; run complete "
            "first");
    }
    S.mark_gs_verified();
    rsgs::Poly f = rsgs::parse_expression(e1, S.alphabet());
    rsgs::Poly g = rsgs::parse_expression(e2, S.alphabet());
    bool equal = nf_equal(f, g, S);

    json report = make_report("equal", bytes + "\n" + e1 + "\n" + e2);
    report["result"]["equal"] = equal;
    emit(report, as_json, std::string(equal ? "equal" : "not equal") + "\n");
    return equal ? kExitTrue : kExitFalse;
}

int cmd_oracle(const std::string& path, std::size_t max_degree, bool as_json,
               std::size_t cap) {
    std::string bytes = slurp(path);
    rsgs::PresentationFile file = rsgs::load_presentation_file(path);
    rsgs::Presentation S = presentation_from(file);
    rsgs::DegreeTable table =
        quotient_dims(S, max_degree, rsgs::Execution::parallel, cap);

    json report = make_report("oracle", bytes);
    report["result"]["max_degree"] = max_degree;
    report["per_degree"] = degree_table_json(table.dims);

    std::ostringstream text;
    for (std::size_t d = 1; d <= max_degree; ++d) {
        text << "degree " << d << ": " << table.at(d) << "\n";
    }
    emit(report, as_json, text.str());
    return kExitTrue;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gröbner-Shirshov engine for free right-symmetric algebras"};
    app.require_subcommand(1);

    bool as_json = false;
    std::size_t cap = rsgs::kDefaultEnumerationCap;
    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--json", as_json, "machine-readable reports");
        sub->add_option("--cap", cap, "enumeration resource cap (words)");
    };

    std::string expr, w1, w2, generators;
    auto* normalize_cmd =
        app.add_subcommand("normalize", "expand an expression in the good-word basis");
    normalize_cmd->add_option("EXPR", expr)->required();
    normalize_cmd->add_option("--generators", generators,
                              "comma-separated alphabet, in order");

    auto* compare_cmd = app.add_subcommand("compare", "deg-lex verdict for two words");
    compare_cmd->add_option("W1", w1)->required();
    compare_cmd->add_option("W2", w2)->required();
    compare_cmd->add_option("--generators", generators,
                            "comma-separated alphabet, in order");

    std::string file_path, output, e1, e2;
    std::size_t max_degree = 0;

    auto* checkgs_cmd = app.add_subcommand("check-gs", "Gröbner-Shirshov basis check");
    checkgs_cmd->add_option("FILE", file_path)->required();

    auto* complete_cmd = app.add_subcommand("complete", "completion up to a degree bound");
    complete_cmd->add_option("FILE", file_path)->required();
    complete_cmd->add_option("--max-degree", max_degree)->required();
    complete_cmd->add_option("--output", output, "write the completed presentation here");

    auto* irr_cmd = app.add_subcommand("irr", "irreducible-word basis listing");
    irr_cmd->add_option("FILE", file_path)->required();
    irr_cmd->add_option("--max-degree", max_degree)->required();

    auto* envelope_cmd = app.add_subcommand(
        "envelope", "validate a Lie table and verify its enveloping basis");
    envelope_cmd->add_option("FILE", file_path)->required();

    auto* equal_cmd = app.add_subcommand("equal", "normal-form equality verdict");
    equal_cmd->add_option("FILE", file_path)->required();
    equal_cmd->add_option("EXPR1", e1)->required();
    equal_cmd->add_option("EXPR2", e2)->required();

    auto* oracle_cmd = app.add_subcommand(
        "oracle", "quotient dimensions by exact linear algebra");
    oracle_cmd->add_option("FILE", file_path)->required();
    oracle_cmd->add_option("--max-degree", max_degree)->required();

    for (CLI::App* sub : {normalize_cmd, compare_cmd, checkgs_cmd, complete_cmd,
                          irr_cmd, envelope_cmd, equal_cmd, oracle_cmd}) {
        add_common(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (normalize_cmd->parsed()) return cmd_normalize(expr, generators, as_json);
        if (compare_cmd->parsed()) return cmd_compare(w1, w2, generators, as_json);
        if (checkgs_cmd->parsed()) return cmd_check_gs(file_path, as_json, cap);
        if (complete_cmd->parsed()) {
            if (max_degree == 0) {
                throw rsgs::InvalidInputError("--max-degree must be >= 1");
            }
            return cmd_complete(file_path, max_degree, output, as_json, cap);
        }
        if (irr_cmd->parsed()) {
            if (max_degree == 0) {
                throw rsgs::InvalidInputError("--max-degree must be >= 1");
            }
            return cmd_irr(file_path, max_degree, as_json, cap);
        }
        if (envelope_cmd->parsed()) return cmd_envelope(file_path, as_json, cap);
        if (equal_cmd->parsed()) return cmd_equal(file_path, e1, e2, as_json, cap);
        if (oracle_cmd->parsed()) {
            if (max_degree == 0) {
                throw rsgs::InvalidInputError("--max-degree must be >= 1");
            }
            return cmd_oracle(file_path, max_degree, as_json, cap);
        }
    } catch (const rsgs::ResourceBoundError& e) {
        std::cerr << "resource bound: " << e.what() << "\n";
        return kExitResourceBound;
    } catch (const rsgs::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
