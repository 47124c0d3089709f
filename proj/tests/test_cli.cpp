#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fallcol/cli.hpp"

using namespace fallcol;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path dir;
    TempDir() {
        dir = fs::temp_directory_path() / ("fallcol_test_" + std::to_string(::getpid()));
        fs::create_directories(dir);
    }
    ~TempDir() { fs::remove_all(dir); }
    std::string file(const std::string& name) const { return (dir / name).string(); }
};

int run_cli(const std::vector<std::string>& args, std::string* out_text = nullptr) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    if (out_text) *out_text = out.str();
    return code;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("gen writes dimacs for a family") {
    TempDir tmp;
    std::string out = tmp.file("c5.col");
    CHECK(run_cli({"gen", "--family", "cycle", "--n", "5", "--out", out}) == 0);
    std::string text = slurp(out);
    CHECK(text.find("p edge 5 5") != std::string::npos);
}

TEST_CASE("gen writes dimacs for an expression") {
    TempDir tmp;
    std::string out = tmp.file("prod.col");
    CHECK(run_cli({"gen", "--expr", "prod(cycle(4),cycle(5))", "--out", out}) == 0);
    Graph g = load_dimacs(out);
    CHECK(g.n() == 20);
    CHECK(g.m() == 40);
}

TEST_CASE("gen usage errors exit 2") {
    CHECK(run_cli({"gen"}) == 2);
    CHECK(run_cli({"gen", "--family", "wedge", "--n", "3"}) == 2);
    CHECK(run_cli({"gen", "--family", "cycle", "--n", "2"}) == 2);
    CHECK(run_cli({"gen", "--expr", "cycle(3", "--out", "x.col"}) == 2);
    CHECK(run_cli({"frobnicate"}) == 2);
}

TEST_CASE("solve writes a report and check accepts its witnesses") {
    TempDir tmp;
    std::string graph = tmp.file("c4.col");
    std::string report = tmp.file("report.json");
    REQUIRE(run_cli({"gen", "--family", "cycle", "--n", "4", "--out", graph}) == 0);
    REQUIRE(run_cli({"solve", graph, "--out", report, "--witness-dir", tmp.file("w")}) == 0);

    json j = json::parse(slurp(report));
    CHECK(j["graph"]["n"] == 4);
    CHECK(j["parameters"]["chi"] == 2);
    CHECK(j["parameters"]["fall_spectrum"] == json::array({2}));
    CHECK(j["parameters"]["chi_f"] == 2);
    CHECK(j["parameters"]["psi"] == 2);
    CHECK(j["status"]["chi"] == "EXACT");

    // every emitted witness passes check against the same graph file
    for (const auto& name : {"chi", "chi_f", "psi_f", "phi", "gamma", "partial_gamma", "psi"}) {
        std::string text;
        CHECK(run_cli({"check", graph, tmp.file(std::string("w/") + name + ".json"), "--json"},
                      &text) == 0);
        json cj = json::parse(text);
        CHECK(cj["proper"] == true);
    }
}

TEST_CASE("solve reports empty spectrum for C5") {
    TempDir tmp;
    std::string graph = tmp.file("c5.col");
    REQUIRE(run_cli({"gen", "--family", "cycle", "--n", "5", "--out", graph}) == 0);
    std::string text;
    CHECK(run_cli({"solve", graph, "--params", "fall_spectrum"}, &text) == 0);
    json j = json::parse(text);
    CHECK(j["parameters"]["fall_spectrum"] == json::array());
    CHECK(!j["parameters"].contains("chi_f"));
    CHECK(!j["parameters"].contains("chi"));
}

TEST_CASE("check prints the classification") {
    TempDir tmp;
    std::string graph = tmp.file("c4.col");
    std::string col = tmp.file("bipartition.json");
    REQUIRE(run_cli({"gen", "--family", "cycle", "--n", "4", "--out", graph}) == 0);
    save_coloring(col, Coloring{2, {1, 2, 1, 2}});
    std::string text;
    CHECK(run_cli({"check", graph, col}, &text) == 0);
    CHECK(text.find("fall=true") != std::string::npos);
    CHECK(text.find("k=2") != std::string::npos);
}

TEST_CASE("file errors exit 1") {
    TempDir tmp;
    CHECK(run_cli({"solve", tmp.file("missing.col")}) == 1);
    std::string graph = tmp.file("c4.col");
    REQUIRE(run_cli({"gen", "--family", "cycle", "--n", "4", "--out", graph}) == 0);
    CHECK(run_cli({"check", graph, tmp.file("missing.json")}) == 1);
    // malformed coloring file
    std::ofstream(tmp.file("bad.json")) << "{\"k\": 2}";
    CHECK(run_cli({"check", graph, tmp.file("bad.json")}) == 1);
    // coloring of the wrong length is an input error
    save_coloring(tmp.file("short.json"), Coloring{2, {1, 2}});
    CHECK(run_cli({"check", graph, tmp.file("short.json")}) == 2);
}

TEST_CASE("solve exits 3 on a blown budget with a partial report") {
    TempDir tmp;
    std::string graph = tmp.file("big.col");
    std::string report = tmp.file("r.json");
    REQUIRE(run_cli({"gen", "--expr", "prod(cycle(5),cycle(5))", "--out", graph}) == 0);
    CHECK(run_cli({"solve", graph, "--params", "psi", "--node-budget", "5", "--out", report}) == 3);
    json j = json::parse(slurp(report));
    CHECK(j["status"]["psi"] == "TIMEOUT");
    CHECK(j["parameters"]["psi"].is_null());
}

TEST_CASE("dimacs round trip through gen") {
    TempDir tmp;
    std::string a = tmp.file("a.col");
    REQUIRE(run_cli({"gen", "--expr", "join(path(3),cycle(4))", "--out", a}) == 0);
    Graph g = load_dimacs(a);
    std::string b = tmp.file("b.col");
    save_dimacs(b, g);
    Graph h = load_dimacs(b);
    CHECK(g.n() == h.n());
    CHECK(g.edge_list() == h.edge_list());
}
