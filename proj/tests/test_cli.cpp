#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unistd.h>

#include "spc/cli.hpp"
#include "spc/json_io.hpp"

using namespace spc;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("spc_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    std::string file(const char* name) const { return (path / name).string(); }
    static int& counter() {
        static int n = 0;
        return n;
    }
};

// run_cli prints to std::cout/cerr; capture cout for output assertions
struct CoutCapture {
    std::ostringstream sink;
    std::streambuf* saved;
    CoutCapture() : saved(std::cout.rdbuf(sink.rdbuf())) {}
    ~CoutCapture() { std::cout.rdbuf(saved); }
    std::string text() const { return sink.str(); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

} // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("realize writes a graph and reports girth") {
    TempDir tmp;
    std::string out = tmp.file("theta.json");
    CoutCapture cap;
    int rc = run_cli({"realize", "P(e^2,e^3)", "--out", out});
    REQUIRE(rc == 0);
    CHECK(cap.text().find("girth: 5") != std::string::npos);

    RealizedGraph g = graph_from_json(load_json_file(out));
    CHECK(g.vertex_count() == 5);
    CHECK(girth(g) == 5);
}

TEST_CASE("realize exit codes follow the contract") {
    CHECK(run_cli({"realize", "P(e,e)"}) == 1);        // multi-edge precondition
    CHECK(run_cli({"realize", "S(e"}) == 3);           // syntax error
    CHECK(run_cli({"realize"}) == 1);                  // neither expr nor --in
    CHECK(run_cli({"realize", "--in", "/no/such.json"}) == 3);
    CHECK(run_cli({"realize", "e", "--in", "x.json"}) == 1);
}

TEST_CASE("realize --in echoes a graph file") {
    TempDir tmp;
    std::string first = tmp.file("square.json");
    REQUIRE(run_cli({"realize", "P(e^2,e^2)", "--out", first}) == 0);
    std::string second = tmp.file("echo.json");
    CHECK(run_cli({"realize", "--in", first, "--out", second}) == 0);
    CHECK(slurp(first) == slurp(second));
}

TEST_CASE("colour validates and writes a colouring") {
    TempDir tmp;
    std::string graph = tmp.file("c5.json");
    REQUIRE(run_cli({"realize", "P(e^2,e^3)", "--out", graph}) == 0);

    ListAssignment lists;
    for (int v = 0; v < 5; ++v) lists[v] = ColourSet{1, 2, 3};
    std::string lists_path = tmp.file("lists.json");
    save_json_file(lists_path, lists_to_json(lists));

    std::string out = tmp.file("colours.json");
    std::string trace = tmp.file("trace.json");
    CoutCapture cap;
    int rc = run_cli({"colour", "--graph", graph, "--lists", lists_path, "--m", "1", "--k",
                      "5", "--out", out, "--trace", trace});
    REQUIRE(rc == 0);

    MultiColouring phi = colouring_from_json(load_json_file(out));
    RealizedGraph g = graph_from_json(load_json_file(graph));
    CHECK(check_colouring(g, lists, phi, 1).ok());

    nlohmann::json tj = load_json_file(trace);
    CHECK(tj.contains("trace"));
    CHECK(tj.at("trace").size() >= 1);
}

TEST_CASE("colour rejects thin lists with exit 1") {
    TempDir tmp;
    std::string graph = tmp.file("c4.json");
    REQUIRE(run_cli({"realize", "P(e^2,e^2)", "--out", graph}) == 0);
    ListAssignment lists;
    for (int v = 0; v < 4; ++v) lists[v] = ColourSet{1, 2};
    std::string lists_path = tmp.file("lists.json");
    save_json_file(lists_path, lists_to_json(lists));
    CHECK(run_cli({"colour", "--graph", graph, "--lists", lists_path, "--m", "1", "--k",
                   "3"}) == 1);
}

TEST_CASE("gadget then verify-gadget round trips with exit 0") {
    TempDir tmp;
    std::string gadget = tmp.file("gadget.json");
    std::string cert = tmp.file("cert.json");
    {
        CoutCapture cap;
        REQUIRE(run_cli({"gadget", "--k", "3", "--m", "2", "--e", "1", "--out", gadget}) == 0);
    }
    CoutCapture cap;
    int rc = run_cli({"verify-gadget", gadget, "--workers", "2", "--out", cert});
    REQUIRE(rc == 0);
    CHECK(cap.text().find("100/100") != std::string::npos);

    nlohmann::json cj = load_json_file(cert);
    CHECK(cj.at("pairs_checked") == 100);
    CHECK(cj.at("all_uncolourable") == true);
    CHECK(cj.at("defects").empty());
}

TEST_CASE("verify-gadget reports defects with exit 2") {
    TempDir tmp;
    std::string gadget = tmp.file("gadget.json");
    REQUIRE(run_cli({"gadget", "--k", "3", "--m", "2", "--e", "1", "--out", gadget}) == 0);

    // widen one interior list so its pin pair gains a colouring
    nlohmann::json j = load_json_file(gadget);
    GadgetBundle bundle = gadget_from_json(j);
    int victim = bundle.pairing[7].path[1];
    j["lists"][std::to_string(victim)].push_back(410);
    j["lists"][std::to_string(victim)].push_back(411);
    save_json_file(gadget, j);

    CoutCapture cap;
    CHECK(run_cli({"verify-gadget", gadget}) == 2);
}

TEST_CASE("verify-gadget rejects structurally broken bundles with exit 1") {
    TempDir tmp;
    std::string gadget = tmp.file("gadget.json");
    REQUIRE(run_cli({"gadget", "--k", "3", "--m", "2", "--e", "1", "--out", gadget}) == 0);
    nlohmann::json j = load_json_file(gadget);
    j["pairing"].erase(0); // no longer a bijection
    save_json_file(gadget, j);
    CHECK(run_cli({"verify-gadget", gadget}) == 1);
}

TEST_CASE("gadget parameter gate exits 1") {
    TempDir tmp;
    CHECK(run_cli({"gadget", "--k", "3", "--m", "1", "--e", "1", "--out",
                   tmp.file("no.json")}) == 1);
}

TEST_CASE("bound prints exact ratios") {
    {
        CoutCapture cap;
        REQUIRE(run_cli({"bound", "3"}) == 0);
        CHECK(cap.text().find("critical-ratio 3") != std::string::npos);
        CHECK(cap.text().find("q=1") != std::string::npos);
    }
    {
        CoutCapture cap;
        REQUIRE(run_cli({"bound", "7"}) == 0);
        CHECK(cap.text().find("critical-ratio 5/2") != std::string::npos);
    }
    {
        CoutCapture cap;
        REQUIRE(run_cli({"bound", "11"}) == 0);
        CHECK(cap.text().find("critical-ratio 7/3") != std::string::npos);
    }
    CHECK(run_cli({"bound", "2"}) == 1);
}

TEST_CASE("deterministic artifacts are byte-identical run to run") {
    TempDir tmp;
    std::string a = tmp.file("a.json");
    std::string b = tmp.file("b.json");
    REQUIRE(run_cli({"realize", "P(e^3,e^4)", "--out", a}) == 0);
    REQUIRE(run_cli({"realize", "P(e^3,e^4)", "--out", b}) == 0);
    CHECK(slurp(a) == slurp(b));

    std::string ga = tmp.file("ga.json");
    std::string gb = tmp.file("gb.json");
    REQUIRE(run_cli({"gadget", "--k", "4", "--m", "2", "--e", "1", "--out", ga}) == 0);
    REQUIRE(run_cli({"gadget", "--k", "4", "--m", "2", "--e", "1", "--out", gb}) == 0);
    CHECK(slurp(ga) == slurp(gb));
}

TEST_CASE("realize without --out streams the graph JSON to stdout") {
    CoutCapture cap;
    REQUIRE(run_cli({"realize", "e^2"}) == 0);
    RealizedGraph g = graph_from_json(nlohmann::json::parse(cap.text()));
    CHECK(g.vertex_count() == 3);
    CHECK(is_path(g));
}

TEST_CASE("unknown flags are parameter errors") {
    CHECK(run_cli({"bound", "--grapefruit"}) == 1);
    CHECK(run_cli({}) == 1); // a subcommand is required
}

TEST_SUITE_END();
