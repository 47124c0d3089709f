// graph.hpp -- immutable simple undirected graphs and the constructions
// (join, Cartesian product, pendant attachment) the workbench operates on.
//
// Vertices are 0..n-1. Adjacency lists are kept sorted; every constructor
// validates the simple-graph invariants (no self-loops, symmetry, ids in
// range), so a Graph value can always be trusted downstream.
#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fallcol {

class Graph {
public:
    // Builds a graph from an unordered edge list. Duplicate edges are
    // deduplicated; self-loops and out-of-range ids are rejected.
    Graph(int n, const std::vector<std::pair<int, int>>& edges, std::string name = "")
        : n_(n), name_(std::move(name)) {
        if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
        adj_.assign(static_cast<std::size_t>(n), {});
        std::vector<std::pair<int, int>> norm;
        norm.reserve(edges.size());
        for (const auto& [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw std::invalid_argument("Graph: vertex id out of range [0," +
                                            std::to_string(n) + "): (" + std::to_string(u) +
                                            "," + std::to_string(v) + ")");
            if (u == v)
                throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(u));
            norm.emplace_back(std::min(u, v), std::max(u, v));
        }
        std::sort(norm.begin(), norm.end());
        norm.erase(std::unique(norm.begin(), norm.end()), norm.end());
        m_ = static_cast<long long>(norm.size());
        for (const auto& [u, v] : norm) {
            adj_[static_cast<std::size_t>(u)].push_back(v);
            adj_[static_cast<std::size_t>(v)].push_back(u);
        }
        for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    }

    int n() const { return n_; }
    long long m() const { return m_; }
    const std::string& name() const { return name_; }

    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

    bool adjacent(int u, int v) const {
        const auto& nb = adj_[static_cast<std::size_t>(u)];
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    int min_degree() const {
        if (n_ == 0) throw std::logic_error("min_degree: empty graph");
        int d = degree(0);
        for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
        return d;
    }

    int max_degree() const {
        if (n_ == 0) throw std::logic_error("max_degree: empty graph");
        int d = degree(0);
        for (int v = 1; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }

    std::vector<std::pair<int, int>> edge_list() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<std::size_t>(m_));
        for (int u = 0; u < n_; ++u)
            for (int v : neighbors(u))
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    Graph renamed(std::string name) const {
        Graph g = *this;
        g.name_ = std::move(name);
        return g;
    }

private:
    int n_ = 0;
    long long m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::string name_;
};

struct DegreeStats {
    int min_degree = 0;
    int max_degree = 0;
    int n = 0;
    long long m = 0;
};

inline Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges,
                            std::string name = "") {
    return Graph(n, edges, std::move(name));
}

inline DegreeStats degree_stats(const Graph& g) {
    if (g.n() == 0) throw std::invalid_argument("degree_stats: empty graph");
    return DegreeStats{g.min_degree(), g.max_degree(), g.n(), g.m()};
}

// Join of one or more parts: disjoint union plus all edges between distinct
// parts. Part i's vertex v maps to (sum of earlier part sizes) + v.
inline Graph join(const std::vector<Graph>& parts, std::string name = "") {
    if (parts.empty()) throw std::invalid_argument("join: empty part list");
    int total = 0;
    for (const Graph& p : parts) {
        if (p.n() == 0) throw std::invalid_argument("join: empty part");
        total += p.n();
    }
    std::vector<std::pair<int, int>> edges;
    int offset = 0;
    std::vector<int> offsets;
    offsets.reserve(parts.size());
    for (const Graph& p : parts) {
        offsets.push_back(offset);
        for (const auto& [u, v] : p.edge_list()) edges.emplace_back(offset + u, offset + v);
        offset += p.n();
    }
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            for (int u = 0; u < parts[i].n(); ++u)
                for (int v = 0; v < parts[j].n(); ++v)
                    edges.emplace_back(offsets[i] + u, offsets[j] + v);
    if (name.empty()) {
        name = "join(";
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) name += ",";
            name += parts[i].name().empty() ? "?" : parts[i].name();
        }
        name += ")";
    }
    return Graph(total, edges, std::move(name));
}

// Offsets of each part inside join(parts); last entry is the total size.
inline std::vector<int> join_offsets(const std::vector<int>& part_sizes) {
    std::vector<int> offsets(part_sizes.size() + 1, 0);
    for (std::size_t i = 0; i < part_sizes.size(); ++i)
        offsets[i + 1] = offsets[i] + part_sizes[i];
    return offsets;
}

// Cartesian product: vertex (u,v) has index u*|V(h)|+v; (u1,v1)~(u2,v2) iff
// the vertices agree in one coordinate and are adjacent in the other.
inline Graph cartesian_product(const Graph& g, const Graph& h, std::string name = "") {
    if (g.n() == 0 || h.n() == 0)
        throw std::invalid_argument("cartesian_product: empty factor");
    const int nh = h.n();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.n(); ++u)
        for (const auto& [v1, v2] : h.edge_list())
            edges.emplace_back(u * nh + v1, u * nh + v2);
    for (const auto& [u1, u2] : g.edge_list())
        for (int v = 0; v < nh; ++v)
            edges.emplace_back(u1 * nh + v, u2 * nh + v);
    if (name.empty())
        name = (g.name().empty() ? "?" : g.name()) + "x" + (h.name().empty() ? "?" : h.name());
    return Graph(g.n() * h.n(), edges, std::move(name));
}

// Attaches counts[v] new leaves to each vertex v. Leaves are appended after
// the original vertices, grouped by anchor in id order.
inline Graph add_pendants(const Graph& g, const std::vector<int>& counts, std::string name = "") {
    if (static_cast<int>(counts.size()) != g.n())
        throw std::invalid_argument("add_pendants: counts length != vertex count");
    long long extra = 0;
    for (int c : counts) {
        if (c < 0) throw std::invalid_argument("add_pendants: negative count");
        extra += c;
    }
    std::vector<std::pair<int, int>> edges = g.edge_list();
    int next = g.n();
    for (int v = 0; v < g.n(); ++v)
        for (int i = 0; i < counts[static_cast<std::size_t>(v)]; ++i)
            edges.emplace_back(v, next++);
    if (name.empty()) name = g.name();
    return Graph(g.n() + static_cast<int>(extra), edges, std::move(name));
}

// Sorted degree multiset; equal multisets are a cheap isomorphism-necessary check.
inline std::vector<int> degree_multiset(const Graph& g) {
    std::vector<int> d(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) d[static_cast<std::size_t>(v)] = g.degree(v);
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace fallcol
