#include <doctest.h>

#include <algorithm>
#include <random>

#include "spc/errors.hpp"
#include "spc/graph.hpp"
#include "spc/sp_term.hpp"

using namespace spc;

namespace {

RealizedGraph cycle(int n) {
    std::vector<int> vertices(n);
    for (int i = 0; i < n; ++i) vertices[i] = i;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return make_graph(std::move(vertices), std::move(edges));
}

// theta graph: two internally disjoint x-y paths of the given lengths
RealizedGraph theta(int len_a, int len_b, bool with_terminals = true) {
    SPTerm term = SPTerm::parallel(
        {series_power(SPTerm::edge(), len_a), series_power(SPTerm::edge(), len_b)});
    RealizedGraph g = realize(term);
    if (!with_terminals) g.terminals.reset();
    return g;
}

// every degree-2 non-terminal chain of length l, by brute force over all
// simple paths; used as the oracle for find_removable_chain
std::vector<std::vector<int>> all_chains(const RealizedGraph& g, int l) {
    Adjacency adj(g);
    std::vector<std::vector<int>> found;
    std::vector<int> path;
    auto extend = [&](auto&& self, int v) -> void {
        path.push_back(v);
        if (static_cast<int>(path.size()) == l + 1) {
            bool ok = true;
            for (std::size_t i = 1; i + 1 < path.size(); ++i)
                ok = ok && adj.degree(path[i]) == 2 && !g.is_terminal(path[i]);
            if (ok) found.push_back(path);
        } else {
            for (int next : adj.neighbours(v))
                if (std::find(path.begin(), path.end(), next) == path.end()) self(self, next);
        }
        path.pop_back();
    };
    for (int v : g.vertices) extend(extend, v);
    return found;
}

} // namespace

TEST_SUITE_BEGIN("graph");

TEST_CASE("make_graph validates its input") {
    CHECK_THROWS_AS(make_graph({0, 1}, {{0, 0}}), PreconditionError);        // self-loop
    CHECK_THROWS_AS(make_graph({0, 1}, {{0, 2}}), PreconditionError);        // missing vertex
    CHECK_THROWS_AS(make_graph({0, 1}, {{0, 1}, {1, 0}}), PreconditionError); // duplicate
    CHECK_THROWS_AS(make_graph({0, 1}, {{0, 1}}, {{0, 0}}), PreconditionError);
    CHECK_THROWS_AS(make_graph({0, 0, 1}, {}), PreconditionError);

    RealizedGraph g = make_graph({2, 0, 1}, {{2, 0}}, {{0, 2}});
    CHECK(g.vertices == std::vector<int>{0, 1, 2});
    CHECK(g.has_edge(0, 2));
    CHECK(g.is_terminal(2));
    CHECK_FALSE(g.is_terminal(1));
}

TEST_CASE("girth of small graphs") {
    CHECK(girth(cycle(4)) == 4);
    CHECK(girth(make_graph({0, 1}, {{0, 1}})) == std::nullopt); // K2 acyclic
    CHECK(girth(theta(2, 3)) == 5);
    CHECK(girth(cycle(3)) == 3);
    CHECK(girth(theta(2, 2)) == 4);

    // disjoint union of C5 and C3 has girth 3
    RealizedGraph g = make_graph({0, 1, 2, 3, 4, 5, 6, 7},
                                 {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                  {5, 6}, {6, 7}, {7, 5}});
    CHECK(girth(g) == 3);
}

TEST_CASE("girth agrees with brute-force cycle search on random graphs") {
    // oracle: shortest cycle by DFS over all simple paths from each start
    auto brute_girth = [](const RealizedGraph& g) -> std::optional<int> {
        Adjacency adj(g);
        int best = 0;
        std::vector<int> path;
        auto dfs = [&](auto&& self, int v) -> void {
            path.push_back(v);
            for (int next : adj.neighbours(v)) {
                if (path.size() >= 3 && next == path.front()) {
                    int len = static_cast<int>(path.size());
                    if (best == 0 || len < best) best = len;
                }
                if (std::find(path.begin(), path.end(), next) == path.end()) self(self, next);
            }
            path.pop_back();
        };
        for (int v : g.vertices) dfs(dfs, v);
        if (best == 0) return std::nullopt;
        return best;
    };

    std::mt19937_64 rng(1717);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 4 + static_cast<int>(rng() % 5);
        std::vector<int> vertices(n);
        for (int i = 0; i < n; ++i) vertices[i] = i;
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 100 < 35) edges.push_back({u, v});
        RealizedGraph g = make_graph(std::move(vertices), std::move(edges));
        CHECK(girth(g) == brute_girth(g));
    }
}

TEST_CASE("is_path") {
    CHECK(is_path(make_graph({0, 1}, {{0, 1}})));
    CHECK(is_path(make_graph({7}, {})));
    CHECK_FALSE(is_path(cycle(4)));
    CHECK_FALSE(is_path(make_graph({0, 1, 2, 3}, {{0, 1}, {0, 2}, {0, 3}}))); // star
    CHECK_FALSE(is_path(make_graph({0, 1, 2}, {{0, 1}})));                    // disconnected
    CHECK(is_path(make_graph({0, 1, 2, 3}, {{0, 1}, {1, 2}, {2, 3}})));
}

TEST_CASE("find_removable_chain on a 6-cycle") {
    auto chain = find_removable_chain(cycle(6), 3);
    REQUIRE(chain.has_value());
    CHECK(chain->length() == 3);
    CHECK(chain->vertices == std::vector<int>{0, 1, 2, 3}); // lexicographically first
}

TEST_CASE("find_removable_chain respects terminals") {
    // theta(2,3) with terminals at the branch vertices: the only valid l=2
    // chain sits inside one of the branches
    RealizedGraph g = theta(2, 3);
    REQUIRE(g.terminals.has_value());
    auto chain = find_removable_chain(g, 2);
    REQUIRE(chain.has_value());

    auto oracle = all_chains(g, 2);
    CHECK(std::find(oracle.begin(), oracle.end(), chain->vertices) != oracle.end());
    CHECK(chain->vertices == *std::min_element(oracle.begin(), oracle.end()));

    // interiors must be degree-2 non-terminals
    Adjacency adj(g);
    for (std::size_t i = 1; i + 1 < chain->vertices.size(); ++i) {
        CHECK(adj.degree(chain->vertices[i]) == 2);
        CHECK_FALSE(g.is_terminal(chain->vertices[i]));
    }
}

TEST_CASE("find_removable_chain is absent on exhausted paths") {
    RealizedGraph path = make_graph({0, 1, 2}, {{0, 1}, {1, 2}}, {{0, 1}});
    // the only interior vertex of the 2-chain would be vertex 1, a terminal
    CHECK_FALSE(find_removable_chain(path, 2).has_value());
}

TEST_CASE("chain search without terminals treats the exclusion set as empty") {
    RealizedGraph path = make_graph({0, 1, 2}, {{0, 1}, {1, 2}});
    auto chain = find_removable_chain(path, 2);
    REQUIRE(chain.has_value());
    CHECK(chain->vertices == std::vector<int>{0, 1, 2});
}

TEST_CASE("series and parallel composition") {
    RealizedGraph k2 = realize(SPTerm::edge());
    RealizedGraph series = series_compose(k2, k2);
    CHECK(series.vertex_count() == 3);
    CHECK(series.edge_count() == 2);
    CHECK(is_path(series));

    RealizedGraph p2 = realize(series_power(SPTerm::edge(), 2));
    RealizedGraph p3 = realize(series_power(SPTerm::edge(), 3));
    RealizedGraph t = parallel_compose(p2, p3);
    CHECK(t.vertex_count() == 5);
    CHECK(girth(t) == 5);

    CHECK_THROWS_AS(parallel_compose(k2, k2), PreconditionError); // multi-edge
}

TEST_CASE("every non-path realization of the girth class has a chain") {
    for (int k : {5, 7}) {
        int l = (k + 1) / 2;
        for (int i = 0; i < 40; ++i) {
            SPTerm term = random_sp_term(3 + i % 8, 4000 + i);
            RealizedGraph g = realize(term);
            if (auto gv = girth(g); gv && *gv < k) g = realize(series_stretch(term, (k + *gv - 1) / *gv));
            if (is_path(g)) continue;
            auto chain = find_removable_chain(g, l);
            REQUIRE_MESSAGE(chain.has_value(), "k=", k, " i=", i);

            // the chain invariants, verbatim
            Adjacency adj(g);
            REQUIRE(chain->length() == l);
            for (std::size_t p = 0; p + 1 < chain->vertices.size(); ++p)
                CHECK(g.has_edge(chain->vertices[p], chain->vertices[p + 1]));
            std::vector<int> sorted = chain->vertices;
            std::sort(sorted.begin(), sorted.end());
            CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
            for (std::size_t p = 1; p + 1 < chain->vertices.size(); ++p) {
                CHECK(adj.degree(chain->vertices[p]) == 2);
                CHECK_FALSE(g.is_terminal(chain->vertices[p]));
            }
        }
    }
}

TEST_CASE("remove_vertices and connected_components") {
    RealizedGraph g = cycle(6);
    RealizedGraph rest = remove_vertices(g, {1, 2});
    CHECK(rest.vertex_count() == 4);
    CHECK(rest.edge_count() == 3);
    CHECK(is_path(rest));

    auto comps = connected_components(make_graph({0, 1, 2, 3}, {{0, 1}, {2, 3}}));
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<int>{0, 1});
    CHECK(comps[1] == std::vector<int>{2, 3});
}

TEST_SUITE_END();
