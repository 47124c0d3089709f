#include <doctest.h>

#include "fallcol/families.hpp"

using namespace fallcol;

TEST_CASE("path, cycle, complete") {
    CHECK(path(1).n() == 1);
    CHECK(path(5).m() == 4);
    CHECK(cycle(3).m() == 3);
    CHECK(complete(5).m() == 10);
    CHECK_THROWS_AS(path(0), std::invalid_argument);
    CHECK_THROWS_AS(cycle(2), std::invalid_argument);
    CHECK_THROWS_AS(complete(0), std::invalid_argument);
}

TEST_CASE("complete bipartite with and without the matching") {
    Graph k34 = complete_bipartite(3, 4);
    CHECK(k34.n() == 7);
    CHECK(k34.m() == 12);
    CHECK(k34.min_degree() == 3);
    CHECK(k34.max_degree() == 4);

    Graph g = complete_bipartite_minus_matching(3);
    CHECK(g.n() == 6);
    CHECK(g.m() == 6);
    for (int v = 0; v < 6; ++v) CHECK(g.degree(v) == 2);  // isomorphic to C6
    CHECK(!g.adjacent(0, 3));                             // left-0, right-0 pair removed

    for (int n = 1; n <= 6; ++n) {
        Graph h = complete_bipartite_minus_matching(n);
        CHECK(h.n() == 2 * n);
        if (n > 1) {
            CHECK(h.min_degree() == n - 1);
            CHECK(h.max_degree() == n - 1);
        }
    }
}

TEST_CASE("t_tree doubles each round") {
    Graph t3 = t_tree(3);
    CHECK(t3.n() == 4);
    CHECK(t3.m() == 3);
    CHECK(degree_multiset(t3) == std::vector<int>{1, 1, 2, 2});  // P4-shaped

    for (int k = 1; k <= 6; ++k) {
        Graph t = t_tree(k);
        CHECK(t.n() == (1 << (k - 1)));
        CHECK(t.m() == t.n() - 1);  // a tree
        if (k > 1) CHECK(t.max_degree() == k - 1);
    }
    CHECK_THROWS_AS(t_tree(0), std::invalid_argument);
}

TEST_CASE("pendant_path") {
    Graph g = pendant_path(3);
    CHECK(g.n() == 6 + 6 * 5);
    CHECK(g.min_degree() == 1);
    CHECK(g.max_degree() == 7);
}

TEST_CASE("caterpillar pendant counts") {
    Graph g = caterpillar(3);
    // spine of 8 plus 1+2+3+4+5+6 leaves
    CHECK(g.n() == 8 + 21);
    CHECK(g.max_degree() == 7);  // last spine vertex: 6 leaves + 1 spine edge
    CHECK(g.degree(0) == 1);
    CHECK(g.degree(1) == 2);
    CHECK(g.degree(2) == 3);  // 2 spine + 1 leaf
}

TEST_CASE("generate dispatches on the family spec") {
    CHECK(generate({Family::Cycle, 5, 0}).m() == 5);
    CHECK(generate({Family::CompleteBipartite, 2, 3}).m() == 6);
    CHECK(generate({Family::TTree, 4, 0}).n() == 8);
    CHECK(generate({Family::Caterpillar, 3, 0}).n() == 29);
    CHECK_THROWS_AS(generate({Family::Cycle, 1, 0}), std::invalid_argument);
}
