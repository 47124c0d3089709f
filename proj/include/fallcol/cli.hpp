// cli.hpp -- command-line front end.
//
//   fallcol gen    --family cycle --n 5 --out c5.col     write a DIMACS graph
//   fallcol gen    --expr 'prod(cycle(4),cycle(5))' ...  (or from an expression)
//   fallcol solve  g.col [--params ...] [--out r.json]   solve and report
//   fallcol check  g.col coloring.json [--json]          classify a coloring
//   fallcol verify [--eps 3] [--out report.json]         run the verification suite
//
// Exit codes: 0 ok, 1 file errors / failed verification, 2 usage errors,
// 3 solver budget exhausted (partial report written).
#pragma once

#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fallcol/dimacs.hpp"
#include "fallcol/expression.hpp"
#include "fallcol/json_io.hpp"
#include "fallcol/solvers.hpp"
#include "fallcol/verify.hpp"

namespace fallcol::cli {

namespace detail {

inline Graph family_from_flags(const std::string& family, int n, int b) {
    if (family == "path") return path(n);
    if (family == "cycle") return cycle(n);
    if (family == "complete") return complete(n);
    if (family == "kbip") return complete_bipartite(n, b > 0 ? b : n);
    if (family == "kbip_mm") return complete_bipartite_minus_matching(n);
    if (family == "ttree") return t_tree(n);
    if (family == "pendant_path") return pendant_path(n);
    if (family == "caterpillar") return caterpillar(n);
    throw CLI::ValidationError("--family", "unknown family '" + family + "'");
}

inline std::set<std::string> parse_param_list(const std::string& csv) {
    std::set<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.insert(item);
    return out;
}

inline void write_text_or_stdout(const std::string& path, const std::string& text,
                                 std::ostream& fallback) {
    if (path.empty()) {
        fallback << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write file: " + path);
    f << text;
}

inline std::string stem_of(const std::string& path) {
    return std::filesystem::path(path).stem().string();
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
    CLI::App app{"exact workbench for fall colorings and related coloring parameters"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a graph and write it as DIMACS");
    std::string gen_family, gen_expr, gen_out, gen_name;
    int gen_n = 0, gen_b = 0;
    gen->add_option("--family", gen_family,
                    "family: path|cycle|complete|kbip|kbip_mm|ttree|pendant_path|caterpillar");
    gen->add_option("--n", gen_n, "primary size parameter (n, k or eps)");
    gen->add_option("--b", gen_b, "second side for kbip (defaults to --n)");
    gen->add_option("--expr", gen_expr,
                    "constructor expression, e.g. 'join(cycle(4),cycle(6))' or "
                    "'prod(cycle(4),cycle(5))'");
    gen->add_option("--out", gen_out, "output file (default: stdout)");
    gen->add_option("--name", gen_name, "graph label for the DIMACS comment line");

    // solve
    auto* solve = app.add_subcommand("solve", "compute coloring parameters of a DIMACS graph");
    std::string solve_graph, solve_params, solve_out, solve_witness_dir;
    long long solve_nodes = 0;
    double solve_time = 0;
    solve->add_option("graph", solve_graph, "input graph (.col)")->required();
    solve->add_option("--params", solve_params,
                      "comma list from chi,fall_spectrum,chi_f,psi_f,phi,gamma,partial_gamma,psi "
                      "(default: all)");
    solve->add_option("--out", solve_out, "report JSON file (default: stdout)");
    solve->add_option("--witness-dir", solve_witness_dir,
                      "also write each witness as a coloring JSON file into this directory");
    solve->add_option("--node-budget", solve_nodes, "search node budget per solve (0 = unlimited)");
    solve->add_option("--time-budget", solve_time, "seconds per solver call (0 = unlimited)");

    // check
    auto* check = app.add_subcommand("check", "classify a coloring against a graph");
    std::string check_graph, check_coloring;
    bool check_json = false;
    check->add_option("graph", check_graph, "input graph (.col)")->required();
    check->add_option("coloring", check_coloring, "coloring JSON file")->required();
    check->add_flag("--json", check_json, "machine-readable output");

    // verify
    auto* verify = app.add_subcommand(
        "verify", "recompute the cited values and verify the join and gap-family results");
    int verify_eps = 3;
    std::string verify_out;
    long long verify_nodes = 0;
    double verify_time = 0;
    verify->add_option("--eps", verify_eps, "gap parameter (default 3)")->check(CLI::Range(3, 6));
    verify->add_option("--out", verify_out, "report JSON file (default: stdout)");
    verify->add_option("--node-budget", verify_nodes, "search node budget per solve");
    verify->add_option("--time-budget", verify_time, "seconds per solver call");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (gen->parsed()) {
            Graph g = [&]() {
                if (!gen_expr.empty() && !gen_family.empty())
                    throw CLI::ValidationError("gen", "give either --family or --expr, not both");
                if (!gen_expr.empty()) return parse_expression(gen_expr);
                if (!gen_family.empty()) return detail::family_from_flags(gen_family, gen_n, gen_b);
                throw CLI::ValidationError("gen", "one of --family or --expr is required");
            }();
            if (!gen_name.empty()) g = g.renamed(gen_name);
            std::ostringstream text;
            write_dimacs(text, g);
            detail::write_text_or_stdout(gen_out, text.str(), out);
            return 0;
        }

        if (solve->parsed()) {
            Graph g = load_dimacs(solve_graph, detail::stem_of(solve_graph));
            SearchLimits limits{solve_nodes, solve_time};
            std::set<std::string> select = detail::parse_param_list(solve_params);
            ParameterReport rep = parameter_report(g, limits, select);
            json j = report_to_json(rep);
            detail::write_text_or_stdout(solve_out, j.dump(2) + "\n", out);
            if (!solve_witness_dir.empty()) {
                std::filesystem::create_directories(solve_witness_dir);
                for (const auto& [name, w] : j["witnesses"].items())
                    save_coloring(solve_witness_dir + "/" + name + ".json",
                                  coloring_from_json(w));
            }
            for (const auto& [name, s] : j["status"].items())
                if (s.get<std::string>() != "EXACT") return 3;
            return 0;
        }

        if (check->parsed()) {
            Graph g = load_dimacs(check_graph, detail::stem_of(check_graph));
            Coloring c = load_coloring(check_coloring);
            ColoringClass cc = classify(g, c);
            json j = classification_to_json(cc, c.k);
            if (check_json) {
                out << j.dump(2) << "\n";
            } else {
                out << "graph: " << (g.name().empty() ? check_graph : g.name()) << " (n=" << g.n()
                    << ", m=" << g.m() << ")\n";
                out << "k=" << c.k << "\n";
                for (const char* flag : {"proper", "fall", "b_coloring", "grundy",
                                         "partial_grundy", "complete"})
                    out << flag << "=" << (j[flag].get<bool>() ? "true" : "false") << "\n";
                out << "colorful=" << j["colorful"].dump() << "\n";
                out << "grundy_vertices=" << j["grundy_vertices"].dump() << "\n";
                out << "used_colors=" << j["used_colors"].dump() << "\n";
            }
            return 0;
        }

        if (verify->parsed()) {
            SearchLimits limits{verify_nodes, verify_time};
            VerificationSummary summary = run_verification(verify_eps, limits);
            detail::write_text_or_stdout(verify_out, summary.report.dump(2) + "\n", out);
            for (const auto& entry : summary.report["cited_values"])
                err << (entry["ok"].get<bool>() ? "  ok  " : " FAIL ")
                    << entry["name"].get<std::string>() << "\n";
            err << "  " << (summary.report["join_composition"]["ok"].get<bool>() ? "ok" : "FAIL")
                << "  join composition\n";
            err << "  " << (summary.report["join_additivity"]["ok"].get<bool>() ? "ok" : "FAIL")
                << "  join additivity\n";
            for (const auto& entry : summary.report["gap_family"]["entries"])
                err << "  step " << entry["step"] << ": " << entry["status"].get<std::string>()
                    << " (gap " << entry["gap"] << ")\n";
            err << "verification " << (summary.ok ? "PASSED" : "FAILED") << "\n";
            if (!summary.ok) return summary.timed_out ? 3 : 1;
            return summary.timed_out ? 3 : 0;
        }
    } catch (const CLI::ValidationError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const ExpressionError& e) {
        err << "expression error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace fallcol::cli
