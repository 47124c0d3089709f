#include <doctest.h>

#include <algorithm>
#include <random>

#include "fallcol/families.hpp"
#include "fallcol/graph.hpp"

using namespace fallcol;

namespace {

// Full-scan check of the simple-graph invariants.
void check_invariants(const Graph& g) {
    for (int v = 0; v < g.n(); ++v) {
        for (int u : g.neighbors(v)) {
            REQUIRE(u >= 0);
            REQUIRE(u < g.n());
            REQUIRE(u != v);
            REQUIRE(g.adjacent(u, v));
            REQUIRE(g.adjacent(v, u));
        }
        REQUIRE(std::is_sorted(g.neighbors(v).begin(), g.neighbors(v).end()));
    }
}

}  // namespace

TEST_CASE("from_edge_list basics") {
    Graph k2 = from_edge_list(2, {{0, 1}});
    CHECK(k2.n() == 2);
    CHECK(k2.m() == 1);
    CHECK(k2.adjacent(0, 1));

    // duplicate edges (either orientation) collapse
    Graph dedup = from_edge_list(3, {{0, 1}, {1, 0}});
    CHECK(dedup.m() == 1);
    CHECK(dedup.degree(2) == 0);

    Graph c5 = from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CHECK(c5.m() == 5);
    for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);
    check_invariants(c5);
}

TEST_CASE("from_edge_list rejects bad input") {
    CHECK_THROWS_AS(from_edge_list(2, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(from_edge_list(2, {{-1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(from_edge_list(3, {{1, 1}}), std::invalid_argument);
}

TEST_CASE("join of parts") {
    Graph k1 = complete(1);
    Graph j = join({k1, k1});
    CHECK(j.n() == 2);
    CHECK(j.m() == 1);

    Graph c4 = cycle(4);
    Graph jj = join({c4, c4});
    CHECK(jj.n() == 8);
    CHECK(jj.m() == 4 + 4 + 16);
    check_invariants(jj);

    // end vertex of P3 keeps degree 1 and gains the 3 opposite vertices
    Graph p3 = path(3);
    CHECK(join({p3, p3}).min_degree() == 1 + 3);
    CHECK(join({p3, p3}).max_degree() == 2 + 3);

    CHECK_THROWS_AS(join({}), std::invalid_argument);
}

TEST_CASE("join degree law") {
    // deg_join(v) = deg_i(v) + sum of other part sizes
    std::vector<Graph> parts = {path(4), cycle(5), complete(3)};
    Graph j = join(parts);
    std::vector<int> offsets = join_offsets({4, 5, 3});
    int total = j.n();
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (int v = 0; v < parts[i].n(); ++v)
            CHECK(j.degree(offsets[i] + v) == parts[i].degree(v) + (total - parts[i].n()));
    // hence delta(join) >= sum of part deltas
    CHECK(j.min_degree() >= 1 + 2 + 2);
}

TEST_CASE("cartesian product") {
    Graph q = cartesian_product(complete(2), complete(2));
    CHECK(q.n() == 4);
    CHECK(q.m() == 4);
    for (int v = 0; v < 4; ++v) CHECK(q.degree(v) == 2);  // the 4-cycle
    CHECK(q.adjacent(0, 1));
    CHECK(q.adjacent(0, 2));
    CHECK(!q.adjacent(0, 3));

    Graph a = cartesian_product(cycle(4), cycle(5));
    CHECK(a.n() == 20);
    CHECK(a.m() == 40);
    CHECK(a.min_degree() == 4);
    CHECK(a.max_degree() == 4);
    check_invariants(a);

    Graph b = cartesian_product(cycle(5), cycle(5));
    CHECK(b.n() == 25);
    CHECK(b.min_degree() == 4);
    CHECK(b.max_degree() == 4);
}

TEST_CASE("cartesian product commutes on degree multisets") {
    std::vector<std::pair<Graph, Graph>> cases;
    cases.emplace_back(path(3), cycle(4));
    cases.emplace_back(complete(3), path(5));
    cases.emplace_back(cycle(5), complete_bipartite(2, 3));
    for (const auto& [g, h] : cases)
        CHECK(degree_multiset(cartesian_product(g, h)) ==
              degree_multiset(cartesian_product(h, g)));
}

TEST_CASE("add_pendants") {
    Graph k2 = add_pendants(complete(1), {1});
    CHECK(k2.n() == 2);
    CHECK(k2.m() == 1);

    Graph g = add_pendants(path(3), {0, 2, 0});
    CHECK(g.n() == 5);
    CHECK(g.degree(1) == 4);
    CHECK(g.degree(3) == 1);
    CHECK(g.adjacent(1, 3));
    CHECK(g.adjacent(1, 4));

    Graph g4 = add_pendants(path(6), std::vector<int>(6, 5));
    CHECK(g4.n() == 36);
    check_invariants(g4);

    CHECK_THROWS_AS(add_pendants(path(3), {1, 1}), std::invalid_argument);
}

TEST_CASE("degree_stats") {
    DegreeStats c5 = degree_stats(cycle(5));
    CHECK(c5.min_degree == 2);
    CHECK(c5.max_degree == 2);
    CHECK(c5.n == 5);
    CHECK(c5.m == 5);

    DegreeStats k55 = degree_stats(complete_bipartite(5, 5));
    CHECK(k55.min_degree == 5);
    CHECK(k55.max_degree == 5);
    CHECK(k55.n == 10);
    CHECK(k55.m == 25);

    DegreeStats g4 = degree_stats(pendant_path(3));
    CHECK(g4.min_degree == 1);
    CHECK(g4.max_degree == 7);  // interior spine: 2 path neighbors + 5 leaves
}

TEST_CASE("random constructions keep invariants") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 1 + static_cast<int>(rng() % 12);
        std::vector<std::pair<int, int>> edges;
        int want = static_cast<int>(rng() % (n * 2 + 1));
        for (int i = 0; i < want; ++i) {
            int u = static_cast<int>(rng() % n);
            int v = static_cast<int>(rng() % n);
            if (u != v) edges.emplace_back(u, v);
        }
        Graph g = from_edge_list(n, edges);
        check_invariants(g);
        check_invariants(join({g, path(1 + static_cast<int>(rng() % 4))}));
    }
}
