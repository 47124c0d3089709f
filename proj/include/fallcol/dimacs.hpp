// dimacs.hpp -- DIMACS .col graph interchange.
//
// Header line `p edge <n> <m>`, edge lines `e <u> <v>` with 1-based vertex
// ids, comment lines `c ...`. Writing is deterministic: edges sorted
// ascending, one canonical direction each.
#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fallcol/graph.hpp"

namespace fallcol {

inline Graph read_dimacs(std::istream& in, std::string name = "") {
    std::string line;
    int n = -1;
    long long declared_m = -1;
    std::vector<std::pair<int, int>> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank line
        if (tag == "c") continue;
        if (tag == "p") {
            std::string fmt;
            if (!(ls >> fmt >> n >> declared_m) || fmt != "edge" || n < 0)
                throw std::runtime_error("dimacs: bad problem line at line " +
                                         std::to_string(lineno));
            continue;
        }
        if (tag == "e") {
            if (n < 0)
                throw std::runtime_error("dimacs: edge before problem line at line " +
                                         std::to_string(lineno));
            int u = 0, v = 0;
            if (!(ls >> u >> v))
                throw std::runtime_error("dimacs: bad edge line at line " + std::to_string(lineno));
            if (u < 1 || u > n || v < 1 || v > n)
                throw std::runtime_error("dimacs: vertex out of range at line " +
                                         std::to_string(lineno));
            if (u == v)
                throw std::runtime_error("dimacs: self-loop at line " + std::to_string(lineno));
            edges.emplace_back(u - 1, v - 1);
            continue;
        }
        throw std::runtime_error("dimacs: unknown line type '" + tag + "' at line " +
                                 std::to_string(lineno));
    }
    if (n < 0) throw std::runtime_error("dimacs: missing problem line");
    return Graph(n, edges, std::move(name));
}

inline void write_dimacs(std::ostream& out, const Graph& g) {
    if (!g.name().empty()) out << "c " << g.name() << "\n";
    out << "p edge " << g.n() << " " << g.m() << "\n";
    for (const auto& [u, v] : g.edge_list()) out << "e " << (u + 1) << " " << (v + 1) << "\n";
}

inline Graph load_dimacs(const std::string& file, std::string name = "") {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open graph file: " + file);
    return read_dimacs(in, std::move(name));
}

inline void save_dimacs(const std::string& file, const Graph& g) {
    std::ofstream out(file);
    if (!out) throw std::runtime_error("cannot write graph file: " + file);
    write_dimacs(out, g);
}

}  // namespace fallcol
