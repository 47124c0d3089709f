// families.hpp -- generators for the named graph families used by the
// workbench: paths, cycles, complete (bipartite) graphs, the doubled trees
// T(k), and the two pendant constructions.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "fallcol/graph.hpp"

namespace fallcol {

inline Graph path(int n) {
    if (n < 1) throw std::invalid_argument("path: n must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, edges, "P" + std::to_string(n));
}

inline Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: n must be >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph(n, edges, "C" + std::to_string(n));
}

inline Graph complete(int n) {
    if (n < 1) throw std::invalid_argument("complete: n must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges, "K" + std::to_string(n));
}

// K_{a,b}: left side 0..a-1, right side a..a+b-1.
inline Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("complete_bipartite: sides must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
    return Graph(a + b, edges, "K" + std::to_string(a) + "," + std::to_string(b));
}

// K_{n,n} minus the perfect matching that pairs left-i with right-i.
// All choices of removed perfect matching give isomorphic graphs, so the
// canonical one is fixed here. (n-1)-regular on 2n vertices.
inline Graph complete_bipartite_minus_matching(int n) {
    if (n < 1) throw std::invalid_argument("complete_bipartite_minus_matching: n must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) edges.emplace_back(u, n + v);
    return Graph(2 * n, edges, "K" + std::to_string(n) + "," + std::to_string(n) + "-PM");
}

// T(k): T(1) is a single vertex; each of the k-1 growth rounds attaches one
// new leaf to every existing vertex. |V| = 2^(k-1), max degree k-1. Round-r
// leaves are appended as a block: the leaf grown from vertex v gets id
// (size before round) + v.
inline Graph t_tree(int k) {
    if (k < 1) throw std::invalid_argument("t_tree: k must be >= 1");
    if (k > 30) throw std::invalid_argument("t_tree: k too large");
    std::vector<std::pair<int, int>> edges;
    int n = 1;
    for (int round = 2; round <= k; ++round) {
        for (int v = 0; v < n; ++v) edges.emplace_back(v, n + v);
        n *= 2;
    }
    return Graph(n, edges, "T(" + std::to_string(k) + ")");
}

// Path on eps+3 vertices with eps+2 new leaves attached to every vertex.
inline Graph pendant_path(int eps) {
    if (eps < 0) throw std::invalid_argument("pendant_path: eps must be >= 0");
    Graph base = path(eps + 3);
    std::vector<int> counts(static_cast<std::size_t>(base.n()), eps + 2);
    return add_pendants(base, counts, "PendantPath(" + std::to_string(eps) + ")");
}

// Caterpillar: spine path s1..s_{eps+5} (ids 0..eps+4) where spine vertex
// s_i carries i-2 leaves for 3 <= i <= eps+5.
inline Graph caterpillar(int eps) {
    if (eps < 0) throw std::invalid_argument("caterpillar: eps must be >= 0");
    Graph base = path(eps + 5);
    std::vector<int> counts(static_cast<std::size_t>(base.n()), 0);
    for (int i = 3; i <= eps + 5; ++i) counts[static_cast<std::size_t>(i - 1)] = i - 2;
    return add_pendants(base, counts, "Caterpillar(" + std::to_string(eps) + ")");
}

enum class Family {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    BipartiteMinusMatching,
    TTree,
    PendantPath,
    Caterpillar,
};

// Family plus its size parameters: `a` is the primary size (n, k or eps
// depending on the family), `b` is the second side of complete_bipartite.
struct FamilySpec {
    Family family = Family::Path;
    int a = 0;
    int b = 0;
};

inline Graph generate(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::Path: return path(spec.a);
        case Family::Cycle: return cycle(spec.a);
        case Family::Complete: return complete(spec.a);
        case Family::CompleteBipartite: return complete_bipartite(spec.a, spec.b);
        case Family::BipartiteMinusMatching: return complete_bipartite_minus_matching(spec.a);
        case Family::TTree: return t_tree(spec.a);
        case Family::PendantPath: return pendant_path(spec.a);
        case Family::Caterpillar: return caterpillar(spec.a);
    }
    throw std::invalid_argument("generate: unknown family");
}

}  // namespace fallcol
