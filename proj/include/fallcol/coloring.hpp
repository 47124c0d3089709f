// coloring.hpp -- colorings and their classification against the six
// coloring classes the workbench deals with.
//
// A Coloring assigns every vertex a color in 1..k, with k explicit; nothing
// is assumed proper. classify() evaluates each definition independently:
//
//   proper          no edge is monochromatic
//   fall            proper, every vertex colorful (closed nbhd sees all k)
//   b_coloring      proper, every color class contains a colorful vertex
//   grundy          proper, every vertex Grundy (all colors below its own
//                   appear on its open nbhd), every class nonempty
//   partial_grundy  proper, every color class contains a Grundy vertex
//   complete        proper, every pair of distinct classes joined by an edge
//
// A coloring with an empty color class is never fall/b/grundy/partial-
// grundy/complete for that k: all k named classes must be realized,
// otherwise the max-parameters would be unbounded by padding k.
#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fallcol/graph.hpp"

namespace fallcol {

struct Coloring {
    int k = 0;                // colors are 1..k
    std::vector<int> colors;  // per-vertex color
};

struct ColoringClass {
    bool proper = false;
    bool fall = false;
    bool b_coloring = false;
    bool grundy = false;
    bool partial_grundy = false;
    bool complete = false;
    std::vector<int> colorful_set;  // vertices whose closed nbhd sees all k colors
    std::vector<int> grundy_set;    // vertices with all colors below their own on the open nbhd
    std::vector<int> used_colors;   // colors with a nonempty class
};

inline void check_coloring(const Graph& g, const Coloring& c) {
    if (c.k < 1) throw std::invalid_argument("coloring: k must be >= 1");
    if (static_cast<int>(c.colors.size()) != g.n())
        throw std::invalid_argument("coloring: assignment length " +
                                    std::to_string(c.colors.size()) + " != vertex count " +
                                    std::to_string(g.n()));
    for (int col : c.colors)
        if (col < 1 || col > c.k)
            throw std::invalid_argument("coloring: color " + std::to_string(col) +
                                        " outside [1," + std::to_string(c.k) + "]");
}

inline bool is_proper(const Graph& g, const Coloring& c) {
    check_coloring(g, c);
    for (int u = 0; u < g.n(); ++u)
        for (int v : g.neighbors(u))
            if (u < v && c.colors[u] == c.colors[v]) return false;
    return true;
}

// Vertices v with c(N[v]) = {1..k}. Defined for improper colorings too.
inline std::vector<int> colorful_vertices(const Graph& g, const Coloring& c) {
    check_coloring(g, c);
    std::vector<int> out;
    std::vector<char> seen(static_cast<std::size_t>(c.k) + 1, 0);
    for (int v = 0; v < g.n(); ++v) {
        std::fill(seen.begin(), seen.end(), 0);
        seen[static_cast<std::size_t>(c.colors[v])] = 1;
        int distinct = 1;
        for (int u : g.neighbors(v)) {
            auto& s = seen[static_cast<std::size_t>(c.colors[u])];
            if (!s) {
                s = 1;
                ++distinct;
            }
        }
        if (distinct == c.k) out.push_back(v);
    }
    return out;
}

// Vertices v such that every color 1..c(v)-1 appears on the open
// neighborhood of v; color-1 vertices always qualify.
inline std::vector<int> grundy_vertices(const Graph& g, const Coloring& c) {
    check_coloring(g, c);
    std::vector<int> out;
    std::vector<char> seen(static_cast<std::size_t>(c.k) + 1, 0);
    for (int v = 0; v < g.n(); ++v) {
        const int cv = c.colors[v];
        std::fill(seen.begin(), seen.end(), 0);
        for (int u : g.neighbors(v)) seen[static_cast<std::size_t>(c.colors[u])] = 1;
        bool ok = true;
        for (int col = 1; col < cv; ++col)
            if (!seen[static_cast<std::size_t>(col)]) {
                ok = false;
                break;
            }
        if (ok) out.push_back(v);
    }
    return out;
}

inline ColoringClass classify(const Graph& g, const Coloring& c) {
    check_coloring(g, c);
    ColoringClass out;
    out.proper = is_proper(g, c);
    out.colorful_set = colorful_vertices(g, c);
    out.grundy_set = grundy_vertices(g, c);

    std::vector<int> class_size(static_cast<std::size_t>(c.k) + 1, 0);
    for (int col : c.colors) ++class_size[static_cast<std::size_t>(col)];
    for (int col = 1; col <= c.k; ++col)
        if (class_size[static_cast<std::size_t>(col)] > 0) out.used_colors.push_back(col);
    const bool all_nonempty = static_cast<int>(out.used_colors.size()) == c.k;

    std::vector<char> class_has_colorful(static_cast<std::size_t>(c.k) + 1, 0);
    for (int v : out.colorful_set) class_has_colorful[static_cast<std::size_t>(c.colors[v])] = 1;
    std::vector<char> class_has_grundy(static_cast<std::size_t>(c.k) + 1, 0);
    for (int v : out.grundy_set) class_has_grundy[static_cast<std::size_t>(c.colors[v])] = 1;

    bool every_class_colorful = true;
    bool every_class_grundy = true;
    for (int col = 1; col <= c.k; ++col) {
        if (!class_has_colorful[static_cast<std::size_t>(col)]) every_class_colorful = false;
        if (!class_has_grundy[static_cast<std::size_t>(col)]) every_class_grundy = false;
    }

    // Edge between any two distinct classes. k is small; the k*k bitmap scan
    // over the edge list is exact and cheap.
    bool pairs_covered = true;
    if (out.proper && all_nonempty) {
        std::vector<char> pair_seen(static_cast<std::size_t>(c.k + 1) * static_cast<std::size_t>(c.k + 1), 0);
        for (int u = 0; u < g.n(); ++u)
            for (int v : g.neighbors(u))
                if (u < v)
                    pair_seen[static_cast<std::size_t>(std::min(c.colors[u], c.colors[v])) *
                                  static_cast<std::size_t>(c.k + 1) +
                              static_cast<std::size_t>(std::max(c.colors[u], c.colors[v]))] = 1;
        for (int a = 1; a <= c.k && pairs_covered; ++a)
            for (int b = a + 1; b <= c.k; ++b)
                if (!pair_seen[static_cast<std::size_t>(a) * static_cast<std::size_t>(c.k + 1) +
                               static_cast<std::size_t>(b)]) {
                    pairs_covered = false;
                    break;
                }
    }

    out.fall = out.proper && all_nonempty &&
               static_cast<int>(out.colorful_set.size()) == g.n();
    out.b_coloring = out.proper && all_nonempty && every_class_colorful;
    out.grundy = out.proper && all_nonempty &&
                 static_cast<int>(out.grundy_set.size()) == g.n();
    out.partial_grundy = out.proper && all_nonempty && every_class_grundy;
    out.complete = out.proper && all_nonempty && pairs_covered;

    // Internal consistency: the implication chain between the six classes is a
    // theorem, so a violation here means a checker bug, not bad input.
    const bool chain_ok = (!out.fall || (out.proper && out.b_coloring && out.grundy)) &&
                          (!out.b_coloring || out.partial_grundy) &&
                          (!out.grundy || out.partial_grundy) &&
                          (!out.partial_grundy || out.complete);
    if (!chain_ok) throw std::logic_error("classify: implication chain self-check failed");
    return out;
}

}  // namespace fallcol
