#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace spc {

// Undirected simple graph over integer vertex ids, optionally carrying an
// ordered terminal pair (x, y).
struct RealizedGraph {
    std::vector<int> vertices;                    // sorted ascending
    std::vector<std::pair<int, int>> edges;       // normalized u < v, sorted
    std::optional<std::pair<int, int>> terminals; // x != y when present

    int vertex_count() const { return static_cast<int>(vertices.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }
    bool has_vertex(int v) const;
    bool has_edge(int u, int v) const;
    bool is_terminal(int v) const;
};

// Normalizes and validates: no self-loops, no duplicate edges, edge endpoints
// and terminals must exist, terminals must differ.
RealizedGraph make_graph(std::vector<int> vertices,
                         std::vector<std::pair<int, int>> edges,
                         std::optional<std::pair<int, int>> terminals = {});

// Neighbour lists, sorted ascending.
class Adjacency {
public:
    explicit Adjacency(const RealizedGraph& g);
    const std::vector<int>& neighbours(int v) const;
    int degree(int v) const;

private:
    std::map<int, std::vector<int>> adj_;
};

// A path (v_0 .. v_l) whose internal vertices have degree exactly 2 in the
// host graph and are not terminals. Endpoints are unconstrained.
struct Chain {
    std::vector<int> vertices;
    int length() const { return static_cast<int>(vertices.size()) - 1; }
};

// Length of a shortest cycle, or nullopt for forests. Exact: one BFS per edge.
std::optional<int> girth(const RealizedGraph& g);

// Connected, acyclic, and at most two degree-1 endpoints (single vertices and
// edges count as paths).
bool is_path(const RealizedGraph& g);

// The lexicographically first chain of length l, scanning start vertices and
// first edges in ascending id order; nullopt when no chain exists.
std::optional<Chain> find_removable_chain(const RealizedGraph& g, int l);

// Graph-level series / parallel composition; the right operand is relabelled
// onto fresh ids. parallel_compose rejects inputs that would duplicate an edge.
RealizedGraph series_compose(const RealizedGraph& g1, const RealizedGraph& g2);
RealizedGraph parallel_compose(const RealizedGraph& g1, const RealizedGraph& g2);

RealizedGraph remove_vertices(const RealizedGraph& g, const std::vector<int>& doomed);

// Vertex sets of the connected components, each sorted, ordered by smallest id.
std::vector<std::vector<int>> connected_components(const RealizedGraph& g);

} // namespace spc
