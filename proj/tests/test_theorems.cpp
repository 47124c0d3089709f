#include <doctest.h>

#include <random>

#include "fallcol/theorems.hpp"
#include "oracle.hpp"

using namespace fallcol;

namespace {

Coloring fall_witness(const Graph& g, int k) {
    FallDecision d = find_fall_coloring(g, k);
    REQUIRE(d.witness.has_value());
    return *d.witness;
}

}  // namespace

TEST_CASE("compose_join_fall on the small cases") {
    Graph k1 = complete(1);
    Coloring one{1, {1}};
    Coloring j = compose_join_fall({{k1, one}, {k1, one}});
    CHECK(j.k == 2);
    CHECK(j.colors == std::vector<int>{1, 2});

    Coloring c46 = compose_join_fall(
        {{cycle(4), fall_witness(cycle(4), 2)}, {cycle(6), fall_witness(cycle(6), 3)}});
    CHECK(c46.k == 5);
    CHECK(classify(join({cycle(4), cycle(6)}), c46).fall);

    std::vector<std::pair<Graph, Coloring>> triple(
        3, {cycle(4), fall_witness(cycle(4), 2)});
    Coloring c444 = compose_join_fall(triple);
    CHECK(c444.k == 6);
    CHECK(classify(join({cycle(4), cycle(4), cycle(4)}), c444).fall);
}

TEST_CASE("compose_join_fall rejects non-fall inputs") {
    Coloring improper{2, {1, 1, 2, 2}};
    CHECK_THROWS_AS(compose_join_fall({{cycle(4), improper}, {complete(1), {1, {1}}}}),
                    std::invalid_argument);
}

TEST_CASE("restrict_fall splits a composed coloring back") {
    std::vector<Graph> parts = {cycle(4), cycle(6)};
    Coloring joint = compose_join_fall(
        {{parts[0], fall_witness(parts[0], 2)}, {parts[1], fall_witness(parts[1], 3)}});
    std::vector<Coloring> back = restrict_fall(parts, joint);
    REQUIRE(back.size() == 2);
    CHECK(back[0].k == 2);
    CHECK(back[1].k == 3);
    CHECK(classify(parts[0], back[0]).fall);
    CHECK(classify(parts[1], back[1]).fall);
    // the round trip preserves the class partitions
    CHECK(back[0].colors == fall_witness(parts[0], 2).colors);

    Coloring not_fall{2, {1, 2, 1, 2, 1, 2, 1, 2, 1, 2}};
    CHECK_THROWS_AS(restrict_fall(parts, not_fall), std::invalid_argument);
}

TEST_CASE("restriction works for every brute-force fall coloring of C4 v C4") {
    std::vector<Graph> parts = {cycle(4), cycle(4)};
    Graph j = join(parts);
    int found = 0;
    for (int k = 1; k <= j.min_degree() + 1; ++k) {
        oracle::for_each_assignment(j.n(), k, [&](const std::vector<int>& a) {
            if (!oracle::is_fall(j, a, k)) return true;
            ++found;
            std::vector<Coloring> back = restrict_fall(parts, Coloring{k, a});
            REQUIRE(back.size() == 2);
            CHECK(classify(parts[0], back[0]).fall);
            CHECK(classify(parts[1], back[1]).fall);
            CHECK(back[0].k + back[1].k == k);
            return true;
        });
    }
    CHECK(found > 0);  // fall 4-colorings of C4 v C4 exist
}

TEST_CASE("join additivity on the spec'd instances") {
    AdditivityCheck fs = verify_join_additivity({cycle(4), cycle(6)}, JoinParameter::FallSpectrum);
    CHECK(fs.equal);
    CHECK(fs.lhs == std::vector<int>{4, 5});

    AdditivityCheck chi = verify_join_additivity({path(3), path(3)}, JoinParameter::Chi);
    CHECK(chi.equal);
    CHECK(chi.lhs == std::vector<int>{4});

    AdditivityCheck psi = verify_join_additivity({complete(2), complete(3)}, JoinParameter::Psi);
    CHECK(psi.equal);
    CHECK(psi.lhs == std::vector<int>{5});  // the join is K5
}

TEST_CASE("fall-spectrum additivity holds even with an empty part spectrum") {
    // C5 has no fall coloring, so both sides are empty sets
    AdditivityCheck fs = verify_join_additivity({cycle(5), cycle(4)}, JoinParameter::FallSpectrum);
    CHECK(fs.equal);
    CHECK(fs.lhs.empty());
    CHECK(fs.rhs.empty());
    AdditivityCheck cf = verify_join_additivity({cycle(5), cycle(4)}, JoinParameter::ChiF);
    CHECK(cf.equal);
    CHECK(cf.lhs.empty());
}

TEST_CASE("gap_family shapes at eps=3") {
    std::vector<Graph> fam = gap_family(3);
    REQUIRE(fam.size() == 8);
    CHECK(fam[0].n() == 4 * 20);
    CHECK(fam[1].n() == 12);
    CHECK(fam[1].min_degree() == 5);
    CHECK(fam[1].max_degree() == 5);
    CHECK(fam[2].n() == 10);
    CHECK(fam[3].n() == 36);
    CHECK(fam[4].n() == 32);  // T(6) = 2^5 vertices
    CHECK(fam[5].n() == 29);
    CHECK(fam[6].n() == 10);
    CHECK(fam[7].n() == 21);  // P_21 under the vertex-count reading
    CHECK(fam[7].m() == 20);
    CHECK_THROWS_AS(gap_family(2), std::invalid_argument);
}

TEST_CASE("witness constructions validate") {
    for (int k = 2; k <= 6; ++k)
        CHECK(classify(t_tree(k), t_tree_grundy_witness(k)).grundy);
    for (int eps = 3; eps <= 5; ++eps) {
        CHECK(classify(pendant_path(eps), pendant_path_b_witness(eps)).b_coloring);
        CHECK(classify(caterpillar(eps), caterpillar_partial_grundy_witness(eps)).partial_grundy);
    }
    // Euler circuit of K7 covers all 21 edges and closes up
    std::vector<int> circ = eulerian_circuit_complete(7);
    CHECK(circ.size() == 22);
    CHECK(circ.front() == circ.back());
    CHECK(classify(path(22), path_complete_witness(7)).complete);
}

TEST_CASE("grundy numbers of the doubling trees match their order") {
    for (int k = 1; k <= 5; ++k) CHECK(grundy_number(t_tree(k)).value == k);
    // k = 6 by sandwich: validated witness + Delta+1
    CHECK(classify(t_tree(6), t_tree_grundy_witness(6)).grundy);
    CHECK(t_tree(6).max_degree() + 1 == 6);
}

TEST_CASE("verify_gap_family at eps=3") {
    GapReport rep = verify_gap_family(3);
    REQUIRE(rep.entries.size() == 9);  // steps 1..7 plus both step-8 readings
    for (int step = 1; step <= 7; ++step) {
        const GapEntry& e = rep.entries[static_cast<std::size_t>(step - 1)];
        CAPTURE(step);
        CHECK(e.step == step);
        CHECK(e.gap >= 4);
        CHECK((e.status == GapStatus::VerifiedExact || e.status == GapStatus::VerifiedByBounds));
    }
    CHECK(rep.entries[0].param_low == 12);   // chi of the 4-copy join
    CHECK(rep.entries[0].param_high == 16);  // chi_f of the 4-copy join
    CHECK(rep.entries[1].param_low == 2);
    CHECK(rep.entries[1].param_high == 6);
    CHECK(rep.entries[2].param_high == 6);   // delta+1 of K_{5,5}
    CHECK(rep.entries[4].param_high == 6);   // gamma of T(6)
    CHECK(rep.entries[4].param_low == 2);
    CHECK(rep.entries[5].param_low == 4);    // gamma of the caterpillar
    CHECK(rep.entries[5].param_high == 8);
    CHECK(rep.entries[6].param_low == 2);
    CHECK(rep.entries[6].param_high == 6);

    const GapEntry& vtx = rep.entries[7];  // vertex-count reading fails
    CHECK(vtx.step == 8);
    CHECK(vtx.status == GapStatus::Refuted);
    CHECK(vtx.param_high == 6);  // psi(P_21) is exactly 6
    CHECK(vtx.param_low == 3);

    const GapEntry& edg = rep.entries[8];  // edge-count reading holds
    CHECK(edg.step == 8);
    CHECK(edg.status == GapStatus::VerifiedByBounds);
    CHECK(edg.param_high == 7);
    CHECK(edg.param_low == 3);
    CHECK(edg.gap >= 4);
}
