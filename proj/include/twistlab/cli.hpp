#pragma once

#include "twistlab/adjacency.hpp"
#include "twistlab/catalog.hpp"
#include "twistlab/curves.hpp"
#include "twistlab/dehn.hpp"
#include "twistlab/nugatory.hpp"
#include "twistlab/obstruction.hpp"
#include "twistlab/scenario_json.hpp"
#include "twistlab/version.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace twistlab::cli {

// Exit codes: 0 computed, 2 input error, 3 budget-exhausted Unknown.
inline constexpr int exit_ok = 0;
inline constexpr int exit_input_error = 2;
inline constexpr int exit_unknown = 3;

namespace detail {

using nlohmann::json;

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw data_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Scenario lookup order: literal path first, then built-in catalog name.
inline Scenario load_scenario(const std::string& ref) {
    if (std::filesystem::exists(ref)) return scenario_from_json_text(read_file(ref));
    return catalog_scenario(ref);
}

inline std::vector<KnotRecord> load_knot_table(const std::string& ref) {
    if (ref == "builtin") {
        auto t = builtin_knot_table();
        validate_knot_table(t, true);
        return t;
    }
    if (std::filesystem::exists(ref)) return knot_table_from_json_text(read_file(ref));
    throw data_error("knot table not found: " + ref + " (use a file path or \"builtin\")");
}

inline std::vector<Int> parse_vector(const std::string& text) {
    std::vector<Int> out;
    std::string cur;
    for (char ch : text) {
        if (ch == ',') {
            if (cur.empty()) throw parse_error("empty component in vector: " + text);
            out.emplace_back(cur);
            cur.clear();
        } else if (ch == '-' || ch == '+' || (ch >= '0' && ch <= '9')) {
            cur += ch;
        } else {
            throw parse_error("bad character in vector: " + text);
        }
    }
    if (cur.empty()) throw parse_error("empty component in vector: " + text);
    out.emplace_back(cur);
    return out;
}

inline std::string print_vector(const std::vector<Int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += v[i].str();
    }
    return out;
}

inline int default_budget() {
    const char* env = std::getenv("TWISTLAB_BUDGET");
    if (!env) return 2;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 0)
        throw parse_error("TWISTLAB_BUDGET must be a nonnegative decimal integer");
    return static_cast<int>(v);
}

struct Outcome {
    json report;
    int code = exit_ok;
    bool raw = false; // print report payload without the wrapper
};

inline json trace_json(const std::vector<TraceStep>& trace) {
    json out = json::array();
    for (const TraceStep& t : trace) out.push_back({{"step", t.step}, {"note", t.note}});
    return out;
}

} // namespace detail

/// Runs one CLI invocation. Reports are single-line JSON on stdout unless
/// --pretty; every verdict string matches the library's verdict taxonomy.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    using detail::json;
    using detail::Outcome;

    CLI::App app{"twistlab: twist algebra, handlebody words and crossing-change analysis"};
    app.require_subcommand(1);
    bool pretty = false, verify = false;
    app.add_flag("--pretty", pretty, "indent the JSON report");
    app.add_flag("--verify", verify, "re-check the embedded certificate before printing");

    std::string word_text, scenario_ref, curve_name, table_ref, source, target, circle;
    std::string vec_a, vec_b;
    long long genus = 0, q = 0, k = 0, m = 0, cl = 0, n = 0;
    bool mixed_signs = false;
    int budget = -1;
    std::string emit_name;

    CLI::App* c_reduce = app.add_subcommand("reduce", "reduce a cyclic word to canonical form");
    c_reduce->add_option("word", word_text, "word, e.g. \"x1 x2' x1\"")->required();

    CLI::App* c_disc = app.add_subcommand("disc-test", "does a curve bound a disc in the handlebody");
    c_disc->add_option("scenario", scenario_ref)->required();
    c_disc->add_option("curve", curve_name)->required();

    CLI::App* c_ess = app.add_subcommand("essential", "surface-group word problem, genus >= 2");
    c_ess->add_option("genus", genus)->required();
    c_ess->add_option("word", word_text)->required();

    CLI::App* c_twist = app.add_subcommand("twist", "act by a twist power on a homology class");
    c_twist->add_option("genus", genus)->required();
    c_twist->add_option("a", vec_a, "twist curve class, comma-separated")->required();
    c_twist->add_option("q", q)->required();
    c_twist->add_option("b", vec_b, "class to act on")->required();

    CLI::App* c_bound = app.add_subcommand("bound", "commutator-length lower bound 1 + qm/(18k-6)");
    c_bound->add_option("k", k)->required();
    c_bound->add_option("m", m)->required();
    c_bound->add_option("q", q)->required();

    CLI::App* c_obstruct = app.add_subcommand("obstruct", "test a claimed commutator length");
    c_obstruct->add_option("k", k)->required();
    c_obstruct->add_option("m", m)->required();
    c_obstruct->add_option("q", q)->required();
    c_obstruct->add_option("cl", cl)->required();
    c_obstruct->add_flag("--mixed-signs", mixed_signs, "the twists are not all same-handed");

    CLI::App* c_nug = app.add_subcommand("nugatory", "analyze a generalized crossing change");
    c_nug->add_option("scenario", scenario_ref)->required();
    c_nug->add_option("circle", circle)->required();
    c_nug->add_option("q", q)->required();
    c_nug->add_option("--budget", budget, "search budget (default: TWISTLAB_BUDGET or 2)");

    CLI::App* c_adj = app.add_subcommand("adjacency", "fibered-target adjacency dichotomy");
    c_adj->add_option("table", table_ref, "knot table file or \"builtin\"")->required();
    c_adj->add_option("source", source)->required();
    c_adj->add_option("target", target)->required();
    c_adj->add_option("n", n)->required();

    CLI::App* c_cat = app.add_subcommand("catalog", "list or emit the built-in scenarios");
    c_cat->add_option("--emit", emit_name, "print one scenario as JSON");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
            out << app.help() << std::flush;
            return exit_ok;
        }
        err << e.what() << "\n" << app.help() << std::flush;
        return exit_input_error;
    }

    const auto started = std::chrono::steady_clock::now();
    Outcome oc;
    try {
        if (*c_reduce) {
            const CyclicWord w = parse_word(word_text);
            const CyclicWord r = reduce(w);
            if (verify && !(reduce(r) == r)) throw error("reduction is not idempotent");
            oc.report["command"] = "reduce";
            oc.report["inputs"] = {{"word", word_text}};
            oc.report["verdict"] = print_word(r);
            oc.report["certificates"] = {{"length", r.size()}, {"empty", r.empty()}};
        } else if (*c_disc) {
            const Scenario s = detail::load_scenario(scenario_ref);
            const Curve& c = s.atlas.at(curve_name);
            const bool bounds = disc_bound_test(s.alphabet, c);
            if (verify && bounds && !reduce(c.system_word).empty())
                throw error("disc certificate failed re-reduction");
            oc.report["command"] = "disc-test";
            oc.report["inputs"] = {{"scenario", s.name}, {"curve", curve_name}};
            oc.report["verdict"] = bounds ? "true" : "false";
            oc.report["certificates"] = {{"word", print_word(c.system_word)},
                                         {"reduced", print_word(reduce(c.system_word))}};
        } else if (*c_ess) {
            if (genus < 2 || genus > 64) throw domain_error("essential: genus must be in [2, 64]");
            const CyclicWord w = parse_word(word_text);
            const WordVerdict v = dehn_essential_test(static_cast<int>(genus), w);
            if (verify && dehn_essential_test(static_cast<int>(genus), w) != v)
                throw error("word-problem verdict not reproducible");
            oc.report["command"] = "essential";
            oc.report["inputs"] = {{"genus", genus}, {"word", word_text}};
            oc.report["verdict"] = to_string(v);
            oc.report["certificates"] = {{"reduced", print_word(reduce(w))}};
        } else if (*c_twist) {
            if (genus < 0 || genus > 64) throw domain_error("twist: genus out of range");
            const HomologyClass a(static_cast<int>(genus), detail::parse_vector(vec_a));
            const HomologyClass b(static_cast<int>(genus), detail::parse_vector(vec_b));
            const HomologyClass r = twist_homology(a, Int(q), b);
            if (verify && !(transvection(a, Int(q)).act(b) == r))
                throw error("twist disagrees with its matrix");
            oc.report["command"] = "twist";
            oc.report["inputs"] = {{"genus", genus}, {"a", vec_a}, {"q", q}, {"b", vec_b}};
            oc.report["verdict"] = detail::print_vector(r.coords);
            oc.report["certificates"] = {
                {"pairing", intersection_pairing(a, b).str()}};
        } else if (*c_bound) {
            const Rat r = kotschick_bound(k, m, q);
            if (verify && !(r > 1)) throw error("bound must exceed 1");
            oc.report["command"] = "bound";
            oc.report["inputs"] = {{"k", k}, {"m", m}, {"q", q}};
            oc.report["verdict"] = to_string(r);
            oc.report["certificates"] = json::object();
        } else if (*c_obstruct) {
            const ObstructionVerdict v = commutator_obstruction(k, m, q, cl, !mixed_signs, true);
            oc.report["command"] = "obstruct";
            oc.report["inputs"] = {{"k", k},
                                   {"m", m},
                                   {"q", q},
                                   {"cl", cl},
                                   {"mixed_signs", mixed_signs}};
            oc.report["verdict"] = to_string(v.kind);
            oc.report["certificates"] = {{"bound", to_string(v.bound)}, {"detail", v.detail}};
            if (verify) {
                const ObstructionVerdict again = commutator_obstruction(k, m, q, cl, !mixed_signs, true);
                if (again.kind != v.kind) throw error("obstruction verdict not reproducible");
            }
        } else if (*c_nug) {
            const Scenario s = detail::load_scenario(scenario_ref);
            const int b = budget >= 0 ? budget : detail::default_budget();
            const NugatoryReport r = nugatory_analysis(s, circle, q, b);
            if (verify && !verify_nugatory_report(s, r))
                throw error("nugatory certificate failed re-verification");
            oc.report["command"] = "nugatory";
            oc.report["inputs"] = {{"scenario", s.name},
                                   {"circle", circle},
                                   {"q", q},
                                   {"budget", b}};
            oc.report["verdict"] = to_string(r.kind);
            json certs;
            if (r.kind == NugatoryKind::Nugatory) {
                certs["witness_kind"] = r.witness_kind;
                certs["witness_curve"] = r.witness_curve;
                certs["witness_word"] = print_word(r.witness_word);
            } else if (r.kind == NugatoryKind::Obstructed) {
                certs["conjugator"] = r.conjugator_word;
                certs["bound"] = to_string(r.obstruction->bound);
                certs["detail"] = r.obstruction->detail;
            }
            certs["trace"] = detail::trace_json(r.trace);
            oc.report["certificates"] = certs;
            if (r.kind == NugatoryKind::Unknown) oc.code = exit_unknown;
        } else if (*c_adj) {
            const auto table = detail::load_knot_table(table_ref);
            const KnotRecord& src = table_lookup(table, source);
            const KnotRecord& tgt = table_lookup(table, target);
            const AdjacencyClaim claim(src, tgt, n);
            const Dichotomy d = fibered_dichotomy(claim);
            oc.report["command"] = "adjacency";
            oc.report["inputs"] = {{"table", table_ref},
                                   {"source", source},
                                   {"target", target},
                                   {"n", n}};
            oc.report["verdict"] = to_string(d);
            oc.report["certificates"] = {
                {"genus_source", src.genus},
                {"genus_target", tgt.genus},
                {"genus_bound", genus_bound(src.genus, tgt.genus)},
                {"monotonicity_claims", static_cast<long long>(monotonicity_closure(claim).size())}};
            if (verify && fibered_dichotomy(claim) != d)
                throw error("dichotomy verdict not reproducible");
        } else if (*c_cat) {
            if (!emit_name.empty()) {
                const Scenario s = catalog_scenario(emit_name);
                oc.report = scenario_to_json(s);
                if (verify) {
                    const Scenario back = scenario_from_json(oc.report);
                    if (!(scenario_to_json(back) == oc.report))
                        throw error("scenario emission does not round-trip");
                }
                oc.raw = true;
            } else {
                std::string names;
                json listing = json::array();
                for (const Scenario& s : catalog()) {
                    if (!names.empty()) names += ',';
                    names += s.name;
                    listing.push_back({{"name", s.name},
                                       {"genus", s.genus},
                                       {"fiber_genus", s.model.fiber_genus},
                                       {"crossing_circles",
                                        static_cast<long long>(s.model.crossing_circles.size())}});
                }
                oc.report["command"] = "catalog";
                oc.report["inputs"] = json::object();
                oc.report["verdict"] = names;
                oc.report["certificates"] = listing;
            }
        }
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }

    if (!oc.raw) {
        const auto elapsed = std::chrono::steady_clock::now() - started;
        oc.report["timing_ms"] =
            std::chrono::duration_cast<std::chrono::microseconds>(elapsed).count() / 1000.0;
        oc.report["version"] = version;
        if (verify) oc.report["verified"] = true;
    }
    out << (pretty ? oc.report.dump(2) : oc.report.dump()) << "\n";
    return oc.code;
}

} // namespace twistlab::cli
