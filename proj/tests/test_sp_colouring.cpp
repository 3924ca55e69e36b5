#include <doctest.h>

#include <random>

#include "spc/errors.hpp"
#include "spc/sp_colouring.hpp"
#include "spc/sp_term.hpp"

using namespace spc;

namespace {

ColourSet random_subset(std::mt19937_64& rng, int universe, int size) {
    std::vector<int> pool(static_cast<std::size_t>(universe));
    for (int i = 0; i < universe; ++i) pool[i] = i;
    for (int i = 0; i < size; ++i)
        std::swap(pool[i], pool[i + static_cast<int>(rng() % (pool.size() - i))]);
    pool.resize(static_cast<std::size_t>(size));
    return ColourSet(std::move(pool));
}

RealizedGraph cycle(int n) {
    std::vector<int> vertices(n);
    for (int i = 0; i < n; ++i) vertices[i] = i;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return make_graph(std::move(vertices), std::move(edges));
}

// random girth->=k instance: random term, stretched until the girth fits
RealizedGraph girthy_sp_graph(std::uint64_t seed, int leaves, int k) {
    SPTerm term = random_sp_term(leaves, seed);
    RealizedGraph g = realize(term);
    if (auto gv = girth(g); gv && *gv < k) g = realize(series_stretch(term, (k + *gv - 1) / *gv));
    return g;
}

} // namespace

TEST_SUITE_BEGIN("sp_colouring");

TEST_CASE("q and list-size schedule") {
    CHECK(choosability_q(3) == 1);
    CHECK(choosability_q(4) == 1);
    CHECK(choosability_q(6) == 1);
    CHECK(choosability_q(7) == 2);
    CHECK(choosability_q(10) == 2);
    CHECK(choosability_q(11) == 3);
    CHECK_THROWS_AS(choosability_q(2), PreconditionError);

    CHECK(required_list_size(3, 1) == 3);  // ceil(3*1)
    CHECK(required_list_size(3, 2) == 6);
    CHECK(required_list_size(7, 1) == 3);  // ceil(2.5*1)
    CHECK(required_list_size(7, 2) == 5);
    CHECK(required_list_size(7, 3) == 8);  // ceil(2.5*3)
    CHECK(required_list_size(11, 3) == 7); // ceil(7/3*3)

    CHECK(critical_ratio(3) == std::pair<long long, long long>{3, 1});
    CHECK(critical_ratio(7) == std::pair<long long, long long>{5, 2});
    CHECK(critical_ratio(11) == std::pair<long long, long long>{7, 3});
}

TEST_CASE("five-cycle with three colours per vertex") {
    RealizedGraph g = cycle(5);
    ListAssignment lists;
    for (int v : g.vertices) lists[v] = ColourSet{1, 2, 3};
    MultiColouring phi = colour_sp(g, lists, 1, 5);
    CHECK(check_colouring(g, lists, phi, 1).ok());
    CHECK(phi.colours.size() == 5);
}

TEST_CASE("path components use the greedy base case") {
    RealizedGraph k2 = realize(SPTerm::edge());
    ListAssignment lists{{0, ColourSet{0, 1, 2, 3}}, {1, ColourSet{2, 3, 4, 5}}};
    MultiColouring phi = colour_sp(k2, lists, 2, 5);
    CHECK(check_colouring(k2, lists, phi, 2).ok());
}

TEST_CASE("chain removal trace") {
    RealizedGraph g = cycle(6);
    ListAssignment lists;
    for (int v : g.vertices) lists[v] = ColourSet{0, 1, 2};
    ChainTrace trace;
    MultiColouring phi = colour_sp(g, lists, 1, 5, &trace);
    CHECK(check_colouring(g, lists, phi, 1).ok());
    REQUIRE(trace.removed.size() == 1);
    CHECK(trace.removed[0].length() == 3); // ceil(5/2)
}

TEST_CASE("girth and list-size gates") {
    RealizedGraph square = cycle(4);
    ListAssignment lists;
    for (int v : square.vertices) lists[v] = ColourSet{0, 1, 2};
    CHECK_THROWS_AS(colour_sp(square, lists, 1, 5), PreconditionError); // girth 4 < 5

    ListAssignment thin;
    for (int v : square.vertices) thin[v] = ColourSet{0, 1};
    CHECK_THROWS_AS(colour_sp(square, thin, 1, 3), PreconditionError); // 2 < 3 colours
}

TEST_CASE("a non-series-parallel input is reported, never mis-coloured") {
    RealizedGraph k4 =
        make_graph({0, 1, 2, 3}, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    ListAssignment lists;
    for (int v : k4.vertices) lists[v] = ColourSet{0, 1, 2};
    CHECK_THROWS_WITH_AS(colour_sp(k4, lists, 1, 3),
                         doctest::Contains("no removable chain"), PreconditionError);
}

TEST_CASE("disconnected inputs colour componentwise") {
    // two 5-cycles side by side
    std::vector<int> vertices;
    std::vector<std::pair<int, int>> edges;
    for (int base : {0, 5}) {
        for (int i = 0; i < 5; ++i) {
            vertices.push_back(base + i);
            edges.push_back({base + i, base + (i + 1) % 5});
        }
    }
    RealizedGraph g = make_graph(std::move(vertices), std::move(edges));
    ListAssignment lists;
    for (int v : g.vertices) lists[v] = ColourSet{0, 1, 2};
    MultiColouring phi = colour_sp(g, lists, 1, 5);
    CHECK(phi.colours.size() == 10);
    CHECK(check_colouring(g, lists, phi, 1).ok());
}

TEST_CASE("random girth-7 instances at fold 3") {
    std::mt19937_64 rng(31337);
    const int k = 7, m = 3;
    const int size = required_list_size(k, m);
    REQUIRE(size == 8);
    for (int i = 0; i < 30; ++i) {
        RealizedGraph g = girthy_sp_graph(1000 + i, 3 + i % 7, k);
        ListAssignment lists;
        for (int v : g.vertices) lists[v] = random_subset(rng, 6 * m, size);
        MultiColouring phi = colour_sp(g, lists, m, k);
        CHECK(check_colouring(g, lists, phi, m).ok());
    }
}

TEST_CASE("recursion depth stays linear: a long stretched theta") {
    SPTerm term = series_stretch(parse_sp_expression("P(e^2,e^3)"), 6); // girth 30
    RealizedGraph g = realize(term);
    ListAssignment lists;
    for (int v : g.vertices) lists[v] = ColourSet{0, 1, 2};
    MultiColouring phi = colour_sp(g, lists, 1, 7);
    CHECK(check_colouring(g, lists, phi, 1).ok());
    CHECK(phi.colours.size() == static_cast<std::size_t>(g.vertex_count()));
}

TEST_CASE("enlarging a list never breaks a success") {
    std::mt19937_64 rng(555);
    for (int i = 0; i < 20; ++i) {
        const int k = 5, m = 2;
        RealizedGraph g = girthy_sp_graph(7000 + i, 4 + i % 5, k);
        ListAssignment lists;
        for (int v : g.vertices) lists[v] = random_subset(rng, 6 * m, required_list_size(k, m));
        MultiColouring before = colour_sp(g, lists, m, k);
        REQUIRE(check_colouring(g, lists, before, m).ok());

        // grow one list by a bundle of small and large colours
        int victim = g.vertices[rng() % g.vertices.size()];
        ListAssignment grown = lists;
        grown[victim] = grown[victim].unite(ColourSet{100, 101, 102});
        MultiColouring after = colour_sp(g, grown, m, k);
        CHECK(check_colouring(g, grown, after, m).ok());
    }
}

TEST_SUITE_END();
