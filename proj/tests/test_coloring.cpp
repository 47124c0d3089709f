#include <doctest.h>

#include <algorithm>
#include <random>

#include "fallcol/coloring.hpp"
#include "fallcol/families.hpp"
#include "oracle.hpp"

using namespace fallcol;

TEST_CASE("is_proper") {
    Graph k2 = complete(2);
    CHECK(is_proper(k2, {2, {1, 2}}));
    CHECK(!is_proper(k2, {2, {1, 1}}));
    CHECK(is_proper(cycle(5), {3, {1, 2, 1, 2, 3}}));
    CHECK_THROWS_AS(is_proper(k2, Coloring{2, {1}}), std::invalid_argument);
    CHECK_THROWS_AS(is_proper(k2, Coloring{2, {1, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(is_proper(k2, Coloring{0, {}}), std::invalid_argument);
}

TEST_CASE("colorful_vertices") {
    CHECK(colorful_vertices(complete(2), {2, {1, 2}}) == std::vector<int>{0, 1});
    CHECK(colorful_vertices(cycle(4), {2, {1, 2, 1, 2}}) == std::vector<int>{0, 1, 2, 3});
    // one vertex of each of colors 2 and 3 misses the other high color
    CHECK(colorful_vertices(cycle(4), {3, {1, 2, 1, 3}}) == std::vector<int>{0, 2});
    // defined for improper colorings too
    CHECK(colorful_vertices(complete(2), {1, {1, 1}}) == std::vector<int>{0, 1});
}

TEST_CASE("grundy_vertices") {
    Graph p3 = path(3);
    CHECK(grundy_vertices(p3, {1, {1, 1, 1}}) == std::vector<int>{0, 1, 2});
    CHECK(grundy_vertices(p3, {2, {1, 2, 1}}) == std::vector<int>{0, 1, 2});
    CHECK(grundy_vertices(p3, {2, {2, 1, 2}}) == std::vector<int>{0, 1, 2});
    CHECK(grundy_vertices(p3, {3, {1, 3, 1}}) == std::vector<int>{0, 2});  // middle misses 2
}

TEST_CASE("classify on the spec'd small cases") {
    ColoringClass c4 = classify(cycle(4), {2, {1, 2, 1, 2}});
    CHECK(c4.proper);
    CHECK(c4.fall);
    CHECK(c4.b_coloring);
    CHECK(c4.grundy);
    CHECK(c4.partial_grundy);
    CHECK(c4.complete);

    ColoringClass c5 = classify(cycle(5), {3, {1, 2, 1, 2, 3}});
    CHECK(c5.proper);
    CHECK(!c5.fall);  // vertex 1 sees only {1,2}
    CHECK(c5.b_coloring);
    CHECK(c5.grundy);
    CHECK(c5.partial_grundy);
    CHECK(c5.complete);

    ColoringClass k3 = classify(complete(3), {3, {1, 2, 3}});
    CHECK(k3.fall);
    CHECK(k3.complete);

    // an empty color class disqualifies everything except properness
    ColoringClass padded = classify(cycle(4), {3, {1, 2, 1, 2}});
    CHECK(padded.proper);
    CHECK(!padded.fall);
    CHECK(!padded.b_coloring);
    CHECK(!padded.grundy);
    CHECK(!padded.partial_grundy);
    CHECK(!padded.complete);
    CHECK(padded.used_colors == std::vector<int>{1, 2});
}

TEST_CASE("fall flag equals proper plus all-colorful") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 6);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) edges.emplace_back(u, v);
        Graph g = from_edge_list(n, edges);
        int k = 1 + static_cast<int>(rng() % n);
        Coloring c{k, {}};
        for (int v = 0; v < n; ++v) c.colors.push_back(1 + static_cast<int>(rng() % k));
        ColoringClass cc = classify(g, c);
        bool all_colorful = static_cast<int>(cc.colorful_set.size()) == n;
        CHECK(cc.fall == (cc.proper && all_colorful &&
                          static_cast<int>(cc.used_colors.size()) == k));
    }
}

TEST_CASE("implication chain over exhaustive colorings, n <= 4") {
    for (int n = 1; n <= 4; ++n) {
        int pairs = n * (n - 1) / 2;
        for (int mask = 0; mask < (1 << pairs); ++mask) {
            std::vector<std::pair<int, int>> edges;
            int bit = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++bit)
                    if (mask & (1 << bit)) edges.emplace_back(u, v);
            Graph g = from_edge_list(n, edges);
            for (int k = 1; k <= n; ++k) {
                oracle::for_each_assignment(n, k, [&](const std::vector<int>& a) {
                    ColoringClass cc = classify(g, Coloring{k, a});
                    REQUIRE((!cc.fall || cc.b_coloring));
                    REQUIRE((!cc.fall || cc.grundy));
                    REQUIRE((!cc.b_coloring || cc.partial_grundy));
                    REQUIRE((!cc.grundy || cc.partial_grundy));
                    REQUIRE((!cc.partial_grundy || cc.complete));
                    REQUIRE((!cc.fall || cc.proper));
                    return true;
                });
            }
        }
    }
}

TEST_CASE("classify agrees with the definition-level oracle") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + static_cast<int>(rng() % 5);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) edges.emplace_back(u, v);
        Graph g = from_edge_list(n, edges);
        int k = 1 + static_cast<int>(rng() % (n + 1));
        std::vector<int> a;
        for (int v = 0; v < n; ++v) a.push_back(1 + static_cast<int>(rng() % k));
        ColoringClass cc = classify(g, Coloring{k, a});
        CHECK(cc.proper == oracle::proper(g, a));
        CHECK(cc.fall == oracle::is_fall(g, a, k));
        CHECK(cc.b_coloring == oracle::is_b(g, a, k));
        CHECK(cc.grundy == oracle::is_grundy(g, a, k));
        CHECK(cc.partial_grundy == oracle::is_partial_grundy(g, a, k));
        CHECK(cc.complete == oracle::is_complete(g, a, k));
    }
}

TEST_CASE("color permutation preserves the unordered flags") {
    // proper/fall/b/complete are invariant under color relabeling; the two
    // Grundy flags are not (colors are ordered there), so they are not asserted.
    std::mt19937 rng(777);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) edges.emplace_back(u, v);
        Graph g = from_edge_list(n, edges);
        int k = 1 + static_cast<int>(rng() % n);
        Coloring c{k, {}};
        for (int v = 0; v < n; ++v) c.colors.push_back(1 + static_cast<int>(rng() % k));
        std::vector<int> perm(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
        std::shuffle(perm.begin(), perm.end(), rng);
        Coloring pc{k, {}};
        for (int v = 0; v < n; ++v)
            pc.colors.push_back(perm[static_cast<std::size_t>(c.colors[v] - 1)]);
        ColoringClass a = classify(g, c);
        ColoringClass b = classify(g, pc);
        CHECK(a.proper == b.proper);
        CHECK(a.fall == b.fall);
        CHECK(a.b_coloring == b.b_coloring);
        CHECK(a.complete == b.complete);
    }
}
