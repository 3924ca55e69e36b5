#include "spc/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "spc/errors.hpp"

namespace spc {

namespace {

std::pair<int, int> norm_edge(int u, int v) {
    return u < v ? std::pair{u, v} : std::pair{v, u};
}

} // namespace

bool RealizedGraph::has_vertex(int v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
}

bool RealizedGraph::has_edge(int u, int v) const {
    return std::binary_search(edges.begin(), edges.end(), norm_edge(u, v));
}

bool RealizedGraph::is_terminal(int v) const {
    return terminals && (terminals->first == v || terminals->second == v);
}

RealizedGraph make_graph(std::vector<int> vertices, std::vector<std::pair<int, int>> edges,
                         std::optional<std::pair<int, int>> terminals) {
    RealizedGraph g;
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        throw PreconditionError("make_graph: duplicate vertex id");
    g.vertices = std::move(vertices);

    for (auto& [u, v] : edges) {
        if (u == v)
            throw PreconditionError("make_graph: self-loop at vertex " + std::to_string(u));
        if (!g.has_vertex(u) || !g.has_vertex(v))
            throw PreconditionError("make_graph: edge (" + std::to_string(u) + "," +
                                    std::to_string(v) + ") references a missing vertex");
        std::tie(u, v) = norm_edge(u, v);
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end())
        throw PreconditionError("make_graph: duplicate edge (" + std::to_string(dup->first) +
                                "," + std::to_string(dup->second) + ")");
    g.edges = std::move(edges);

    if (terminals) {
        if (terminals->first == terminals->second)
            throw PreconditionError("make_graph: terminals must be distinct");
        if (!g.has_vertex(terminals->first) || !g.has_vertex(terminals->second))
            throw PreconditionError("make_graph: terminal not among vertices");
        g.terminals = terminals;
    }
    return g;
}

Adjacency::Adjacency(const RealizedGraph& g) {
    for (int v : g.vertices) adj_[v];
    for (auto [u, v] : g.edges) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& [v, nbrs] : adj_) std::sort(nbrs.begin(), nbrs.end());
}

const std::vector<int>& Adjacency::neighbours(int v) const {
    auto it = adj_.find(v);
    if (it == adj_.end())
        throw PreconditionError("Adjacency: unknown vertex " + std::to_string(v));
    return it->second;
}

int Adjacency::degree(int v) const { return static_cast<int>(neighbours(v).size()); }

std::optional<int> girth(const RealizedGraph& g) {
    if (g.edges.empty()) return std::nullopt;
    Adjacency adj(g);
    int best = std::numeric_limits<int>::max();

    // Shortest cycle through each edge: BFS distance from u to v avoiding the
    // edge itself, plus one.
    std::unordered_map<int, int> dist;
    dist.reserve(g.vertices.size());
    for (auto [eu, ev] : g.edges) {
        dist.clear();
        dist[eu] = 0;
        std::deque<int> queue{eu};
        int found = -1;
        while (!queue.empty() && found < 0) {
            int cur = queue.front();
            queue.pop_front();
            int d = dist[cur];
            if (d + 1 >= best) break; // cannot improve
            for (int next : adj.neighbours(cur)) {
                if (cur == eu && next == ev) continue; // skip the probed edge
                if (dist.count(next)) continue;
                dist[next] = d + 1;
                if (next == ev) {
                    found = d + 1;
                    break;
                }
                queue.push_back(next);
            }
        }
        if (found > 0) best = std::min(best, found + 1);
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

bool is_path(const RealizedGraph& g) {
    if (g.vertices.empty()) return false;
    auto comps = connected_components(g);
    if (comps.size() != 1) return false;
    // connected and |E| = |V| - 1 rules out cycles
    if (g.edge_count() != g.vertex_count() - 1) return false;
    Adjacency adj(g);
    for (int v : g.vertices)
        if (adj.degree(v) > 2) return false;
    return true;
}

std::optional<Chain> find_removable_chain(const RealizedGraph& g, int l) {
    if (l < 2) throw PreconditionError("find_removable_chain: l must be >= 2");
    Adjacency adj(g);

    auto interior_ok = [&](int v) { return adj.degree(v) == 2 && !g.is_terminal(v); };

    for (int start : g.vertices) {
        for (int first : adj.neighbours(start)) {
            // Interiors have degree 2, so the walk is forced once (start, first)
            // is fixed; it fails as soon as an interior constraint breaks.
            std::vector<int> path{start, first};
            while (static_cast<int>(path.size()) < l + 1) {
                int last = path.back();
                if (!interior_ok(last)) break;
                const auto& nbrs = adj.neighbours(last);
                int next = nbrs[0] == path[path.size() - 2] ? nbrs[1] : nbrs[0];
                if (std::find(path.begin(), path.end(), next) != path.end()) break;
                path.push_back(next);
            }
            if (static_cast<int>(path.size()) == l + 1) return Chain{std::move(path)};
        }
    }
    return std::nullopt;
}

namespace {

// Relabels g onto ids starting at base, keeping relative order.
RealizedGraph shift_ids(const RealizedGraph& g, int base) {
    std::unordered_map<int, int> remap;
    remap.reserve(g.vertices.size());
    int next = base;
    for (int v : g.vertices) remap[v] = next++;
    RealizedGraph out;
    out.vertices.reserve(g.vertices.size());
    for (int v : g.vertices) out.vertices.push_back(remap[v]);
    out.edges.reserve(g.edges.size());
    for (auto [u, v] : g.edges) out.edges.push_back({remap[u], remap[v]});
    if (g.terminals) out.terminals = {{remap[g.terminals->first], remap[g.terminals->second]}};
    return out;
}

// Replaces `from` by `to` everywhere in g's vertex and edge lists.
void identify(RealizedGraph& g, int from, int to) {
    g.vertices.erase(std::remove(g.vertices.begin(), g.vertices.end(), from),
                     g.vertices.end());
    for (auto& [u, v] : g.edges) {
        if (u == from) u = to;
        if (v == from) v = to;
        std::tie(u, v) = u < v ? std::tie(u, v) : std::tie(v, u);
    }
}

RealizedGraph finish_composition(RealizedGraph g, std::pair<int, int> terminals,
                                 const char* op) {
    std::sort(g.vertices.begin(), g.vertices.end());
    std::sort(g.edges.begin(), g.edges.end());
    auto dup = std::adjacent_find(g.edges.begin(), g.edges.end());
    if (dup != g.edges.end())
        throw PreconditionError(std::string(op) + ": composition would duplicate edge (" +
                                std::to_string(dup->first) + "," + std::to_string(dup->second) +
                                ")");
    g.terminals = terminals;
    return g;
}

} // namespace

RealizedGraph series_compose(const RealizedGraph& g1, const RealizedGraph& g2) {
    if (!g1.terminals || !g2.terminals)
        throw PreconditionError("series_compose: both inputs need terminals");
    int base = g1.vertices.empty() ? 0 : g1.vertices.back() + 1;
    RealizedGraph right = shift_ids(g2, base);

    RealizedGraph merged = g1;
    merged.vertices.insert(merged.vertices.end(), right.vertices.begin(), right.vertices.end());
    merged.edges.insert(merged.edges.end(), right.edges.begin(), right.edges.end());
    identify(merged, right.terminals->first, g1.terminals->second);
    return finish_composition(std::move(merged),
                              {g1.terminals->first, right.terminals->second},
                              "series_compose");
}

RealizedGraph parallel_compose(const RealizedGraph& g1, const RealizedGraph& g2) {
    if (!g1.terminals || !g2.terminals)
        throw PreconditionError("parallel_compose: both inputs need terminals");
    int base = g1.vertices.empty() ? 0 : g1.vertices.back() + 1;
    RealizedGraph right = shift_ids(g2, base);

    RealizedGraph merged = g1;
    merged.vertices.insert(merged.vertices.end(), right.vertices.begin(), right.vertices.end());
    merged.edges.insert(merged.edges.end(), right.edges.begin(), right.edges.end());
    identify(merged, right.terminals->first, g1.terminals->first);
    identify(merged, right.terminals->second, g1.terminals->second);
    return finish_composition(std::move(merged), *g1.terminals, "parallel_compose");
}

RealizedGraph remove_vertices(const RealizedGraph& g, const std::vector<int>& doomed) {
    std::unordered_set<int> gone(doomed.begin(), doomed.end());
    RealizedGraph out;
    for (int v : g.vertices)
        if (!gone.count(v)) out.vertices.push_back(v);
    for (auto [u, v] : g.edges)
        if (!gone.count(u) && !gone.count(v)) out.edges.push_back({u, v});
    if (g.terminals && !gone.count(g.terminals->first) && !gone.count(g.terminals->second))
        out.terminals = g.terminals;
    return out;
}

std::vector<std::vector<int>> connected_components(const RealizedGraph& g) {
    Adjacency adj(g);
    std::unordered_set<int> seen;
    std::vector<std::vector<int>> comps;
    for (int v : g.vertices) {
        if (seen.count(v)) continue;
        std::vector<int> comp;
        std::deque<int> queue{v};
        seen.insert(v);
        while (!queue.empty()) {
            int cur = queue.front();
            queue.pop_front();
            comp.push_back(cur);
            for (int next : adj.neighbours(cur)) {
                if (seen.insert(next).second) queue.push_back(next);
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

} // namespace spc
