// residua - verify operator residuation on finite posets.
//
// Subcommands:
//   check FILE            structural property and premise reports
//   tables FILE           print the (.) and -> tables for a variant
//   adjoint FILE          exhaustively verify left adjointness
//   search                sweep enumerated posets against a premise bundle
//   fixtures              list or re-verify the built-in corpus
//
// Exit codes: 0 success, 1 verification failure (with witness), 2 usage or
// parse error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "residua/residua.hpp"

namespace {

using namespace residua;

struct LoadedModel {
    PosetDocument doc;
    Poset poset;
    std::optional<UnaryOp> unary;

    const UnaryOp* unary_ptr() const { return unary ? &*unary : nullptr; }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in && path.find('.') == std::string::npos) in.open(path + ".poset", std::ios::binary);
    if (!in) throw Error(Errc::syntax_error, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

LoadedModel load(const std::string& path) {
    PosetDocument doc = parse_poset_file(slurp(path));
    Poset p = doc.build_poset();
    std::optional<UnaryOp> u = doc.build_unary(p);
    return {std::move(doc), std::move(p), std::move(u)};
}

std::string witness_line(const PropertyWitness& w) {
    std::string s = "witness (";
    for (std::size_t i = 0; i < w.elements.size(); ++i)
        s += (i ? "," : "") + w.elements[i];
    s += "): lhs={";
    for (std::size_t i = 0; i < w.lhs.size(); ++i) s += (i ? "," : "") + w.lhs[i];
    s += "} rhs={";
    for (std::size_t i = 0; i < w.rhs.size(); ++i) s += (i ? "," : "") + w.rhs[i];
    return s + "}";
}

void print_report(const std::string& heading, const PropertyReport& rep) {
    std::cout << heading << "\n";
    for (const auto& [name, v] : rep.entries()) {
        std::cout << "  " << name << ": " << (v.pass ? "pass" : "FAIL");
        if (!v.pass && v.witness) std::cout << "  " << witness_line(*v.witness);
        std::cout << "\n";
    }
}

int cmd_check(const std::string& path, bool as_json) {
    LoadedModel m = load(path);
    const Poset& p = m.poset;

    std::vector<std::pair<std::string, PropertyReport>> reports;
    bool unary_usable = m.unary && p.bounded();
    if (unary_usable) reports.emplace_back("unary", check_unary(p, *m.unary));
    reports.emplace_back("distributivity", is_distributive(p));
    reports.emplace_back("modularity", is_modular(p));
    reports.emplace_back("strong_modularity", is_strongly_modular(p));
    if (unary_usable) {
        reports.emplace_back("boolean", is_boolean(p, *m.unary));
        reports.emplace_back("th1_premises", th1_premises(p, *m.unary));
        reports.emplace_back("th3_premises", th3_premises(p, *m.unary));
    }
    reports.emplace_back("relative_pseudocomplementation", is_relatively_pseudocomplemented(p));

    bool all_pass = true;
    for (const auto& [_, rep] : reports) all_pass = all_pass && rep.all_pass();

    if (as_json) {
        nlohmann::ordered_json j;
        j["poset"] = m.doc.name;
        j["size"] = p.size();
        j["bounded"] = p.bounded();
        if (p.least()) j["least"] = p.name_of(*p.least());
        if (p.greatest()) j["greatest"] = p.name_of(*p.greatest());
        j["lattice"] = is_lattice(p);
        j["has_unary"] = m.unary.has_value();
        nlohmann::ordered_json reps = nlohmann::ordered_json::object();
        for (const auto& [name, rep] : reports) reps[name] = report_to_json(rep);
        j["reports"] = std::move(reps);
        j["all_pass"] = all_pass;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "poset " << m.doc.name << ": " << p.size() << " elements, "
                  << (p.bounded() ? "bounded" : "unbounded");
        if (p.bounded())
            std::cout << " (0=" << p.name_of(*p.least()) << ", 1=" << p.name_of(*p.greatest())
                      << ")";
        std::cout << ", " << (is_lattice(p) ? "lattice" : "not a lattice") << "\n";
        if (m.unary && !p.bounded())
            std::cout << "note: unary checks need a bounded poset; skipped\n";
        for (const auto& [name, rep] : reports) print_report(name, rep);
    }
    return all_pass ? 0 : 1;
}

Variant parse_variant(const std::string& s) {
    std::optional<Variant> v = variant_from_name(s);
    if (!v) throw Error(Errc::syntax_error, "unknown variant " + s);
    return *v;
}

int cmd_tables(const std::string& path, const std::string& variant, const std::string& format,
               bool no_enforce) {
    LoadedModel m = load(path);
    Variant v = parse_variant(variant);
    TableFormat f = format == "markdown" ? TableFormat::Markdown : TableFormat::Tsv;
    auto [t_odot, t_arrow] = build_tables(m.poset, m.unary_ptr(), v, !no_enforce);
    std::cout << render_table(m.poset, t_odot, f) << "\n"
              << render_table(m.poset, t_arrow, f);
    return 0;
}

int cmd_adjoint(const std::string& path, const std::string& variant, bool no_enforce) {
    LoadedModel m = load(path);
    Variant v = parse_variant(variant);
    auto [t_odot, t_arrow] = build_tables(m.poset, m.unary_ptr(), v, !no_enforce);
    AdjointnessVerdict verdict = verify_left_adjointness(m.poset, t_odot, t_arrow);
    const long triples = static_cast<long>(m.poset.size()) * m.poset.size() * m.poset.size();
    if (verdict.holds) {
        std::cout << "left adjointness holds on " << m.doc.name << " (" << variant_name(v)
                  << "): " << triples << " triples checked\n";
        return 0;
    }
    const auto& cx = *verdict.counterexample;
    std::cout << "left adjointness FAILS on " << m.doc.name << " (" << variant_name(v) << ") at ("
              << m.poset.name_of(cx.a) << "," << m.poset.name_of(cx.b) << ","
              << m.poset.name_of(cx.c) << "): "
              << m.poset.name_of(cx.a) << " (.) " << m.poset.name_of(cx.b)
              << " <= " << m.poset.name_of(cx.c) << " is " << (cx.lhs ? "true" : "false") << ", "
              << m.poset.name_of(cx.a) << " <= " << m.poset.name_of(cx.b) << " -> "
              << m.poset.name_of(cx.c) << " is " << (cx.rhs ? "true" : "false") << "\n";
    return 1;
}

int cmd_search(const std::string& premise, int max_size, bool labeled) {
    std::optional<PremiseKind> kind = premise_from_name(premise);
    if (!kind || *kind == PremiseKind::Boolean)
        throw Error(Errc::syntax_error, "premise must be th1, th3 or rp");
    SweepReport rep = sweep(*kind, max_size, !labeled);
    std::cout << "premise " << premise << ", " << rep.runtime_note << "\n"
              << "posets seen:              " << rep.posets_seen << "\n"
              << "models examined:          " << rep.models_examined << "\n"
              << "models passing premises:  " << rep.models_passing_premises << "\n"
              << "adjointness failures:     " << rep.adjointness_failures.size() << "\n"
              << "identity-suite failures:  " << rep.identity_failures.size() << "\n";
    for (const auto* failures : {&rep.adjointness_failures, &rep.identity_failures})
        for (std::size_t i = 0; i < failures->size() && i < 5; ++i) {
            const SweepFailure& fail = (*failures)[i];
            const UnaryOp* u = fail.op ? &*fail.op : nullptr;
            std::cout << "\n" << fail.description << " on:\n"
                      << render_poset_document(document_from(fail.poset, u, "counterexample"));
        }
    return rep.clean() ? 0 : 1;
}

int cmd_fixtures(bool verify) {
    int bad = 0;
    for (const FixtureEntry& f : fixtures()) {
        Poset p = f.document.build_poset();
        std::optional<UnaryOp> u = f.document.build_unary(p);
        if (!verify) {
            std::cout << f.id << "  " << variant_name(f.variant) << "  " << p.size()
                      << " elements  reference tables: " << (f.golden_odot ? "yes" : "no") << "  ("
                      << f.title << ")\n";
            continue;
        }

        if (f.golden_odot) {
            auto [t_odot, t_arrow] = build_tables(p, u ? &*u : nullptr, f.variant);
            for (auto [computed, text, kind] :
                 {std::tuple{&t_odot, f.golden_odot, OpKind::odot},
                  std::tuple{&t_arrow, f.golden_arrow, OpKind::arrow}}) {
                SetValuedTable golden = parse_golden_table(p, kind, text);
                int mismatched = 0;
                std::string first;
                for (int x = 0; x < p.size(); ++x)
                    for (int y = 0; y < p.size(); ++y)
                        if (computed->at(x, y) != golden.at(x, y)) {
                            if (!mismatched)
                                first = "first (" + p.name_of(x) + "," + p.name_of(y) +
                                        "): computed " + render_cell(p, computed->at(x, y)) +
                                        ", reference " + render_cell(p, golden.at(x, y));
                            ++mismatched;
                        }
                std::cout << f.id << " " << op_kind_name(kind) << ": ";
                if (!mismatched) {
                    std::cout << "OK (" << p.size() * p.size() << " cells)\n";
                } else {
                    std::cout << mismatched << " mismatched cells; " << first << "\n";
                    ++bad;
                }
            }
        }

        int verdict_misses = 0;
        for (const auto& [key, want] : f.expected_verdicts)
            if (evaluate_named_check(p, u ? &*u : nullptr, key) != want) {
                std::cout << f.id << " verdict " << key << ": expected " << (want ? "pass" : "fail")
                          << ", got the opposite\n";
                ++verdict_misses;
            }
        std::cout << f.id << " verdicts: "
                  << (verdict_misses ? "MISMATCH" : "OK") << " (" << f.expected_verdicts.size()
                  << " checks)\n";
        bad += verdict_misses;
    }
    return bad ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"operator residuation on finite posets: set-valued conjunction and implication "
                 "tables, premise checking, exhaustive adjointness verification"};
    app.require_subcommand(1);

    std::string file, variant, format = "tsv", premise;
    bool as_json = false, no_enforce = false, labeled = false, verify = false;
    int max_size = 5;

    CLI::App* check = app.add_subcommand("check", "run all property and premise reports on a poset file");
    check->add_option("FILE", file)->required();
    check->add_flag("--json", as_json, "machine-readable report");

    CLI::App* tables = app.add_subcommand("tables", "print the (.) and -> tables for a variant");
    tables->add_option("FILE", file)->required();
    tables->add_option("--variant", variant, "th1|boolean|piecewise|rp")->required();
    tables->add_option("--format", format, "tsv|markdown")
        ->check(CLI::IsMember({"tsv", "markdown"}));
    tables->add_flag("--no-enforce", no_enforce, "skip the premise bundle check");

    CLI::App* adjoint = app.add_subcommand("adjoint", "verify left adjointness exhaustively");
    adjoint->add_option("FILE", file)->required();
    adjoint->add_option("--variant", variant, "th1|boolean|piecewise|rp")->required();
    adjoint->add_flag("--no-enforce", no_enforce, "skip the premise bundle check");

    CLI::App* search = app.add_subcommand("search", "sweep all small posets against a premise bundle");
    search->add_option("--premise", premise, "th1|th3|rp")->required();
    search->add_option("--max-size", max_size, "largest carrier to enumerate (<= 7)")->required();
    search->add_flag("--labeled", labeled, "enumerate labelled posets instead of one per isomorphism class");

    CLI::App* fixture_cmd = app.add_subcommand("fixtures", "list the built-in corpus");
    fixture_cmd->add_flag("--verify", verify, "recompute every reference table and diff");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (check->parsed()) return cmd_check(file, as_json);
        if (tables->parsed()) return cmd_tables(file, variant, format, no_enforce);
        if (adjoint->parsed()) return cmd_adjoint(file, variant, no_enforce);
        if (search->parsed()) return cmd_search(premise, max_size, labeled);
        if (fixture_cmd->parsed()) return cmd_fixtures(verify);
    } catch (const PremisesViolated& e) {
        std::cout << e.what() << "\n";
        print_report("premises", e.report());
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
