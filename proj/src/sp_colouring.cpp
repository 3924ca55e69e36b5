#include "spc/sp_colouring.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "spc/errors.hpp"

namespace spc {

int choosability_q(int k) {
    if (k < 3) throw PreconditionError("choosability_q: k must be >= 3");
    return (k + 1) / 4;
}

int required_list_size(int k, int m) {
    if (m < 1) throw PreconditionError("required_list_size: m must be positive");
    int q = choosability_q(k);
    return 2 * m + (m + q - 1) / q;
}

std::pair<long long, long long> critical_ratio(int k) {
    long long q = choosability_q(k);
    return {2 * q + 1, q}; // gcd(2q+1, q) = 1, already reduced
}

namespace {

// Pendant peeling: vertices removed in order, each remembering the one
// neighbour it still had. Colouring them in reverse order only ever has to
// dodge that single neighbour, exactly like the path walk.
struct Peeled {
    int vertex;
    std::optional<int> parent;
};

struct SpColourer {
    const ListAssignment& lists;
    int m;
    int chain_len; // ceil(k/2)
    int slack;     // ceil(m/q)
    MultiColouring phi;
    ChainTrace* trace;

    // Vertex sequence of a path component, walked from its smallest endpoint.
    std::vector<int> path_order(const RealizedGraph& comp) const {
        if (comp.vertex_count() == 1) return {comp.vertices.front()};
        Adjacency adj(comp);
        int start = -1;
        for (int v : comp.vertices) {
            if (adj.degree(v) == 1) {
                start = v;
                break;
            }
        }
        std::vector<int> order{start};
        int prev = -1;
        int cur = start;
        while (static_cast<int>(order.size()) < comp.vertex_count()) {
            const auto& nbrs = adj.neighbours(cur);
            int next = (nbrs.size() > 1 && nbrs[0] == prev) ? nbrs[1] : nbrs[0];
            order.push_back(next);
            prev = cur;
            cur = next;
        }
        return order;
    }

    void colour_graph(const RealizedGraph& g) {
        for (const std::vector<int>& comp_vertices : connected_components(g)) {
            std::vector<int> others;
            std::unordered_set<int> keep(comp_vertices.begin(), comp_vertices.end());
            for (int v : g.vertices)
                if (!keep.count(v)) others.push_back(v);
            colour_component(remove_vertices(g, others));
        }
    }

    // Strips degree <= 1 vertices (smallest id first) until the rest has
    // minimum degree 2; that remainder is empty exactly when comp is a tree.
    std::vector<Peeled> peel_pendants(const RealizedGraph& comp) const {
        std::unordered_map<int, std::unordered_set<int>> adj;
        for (int v : comp.vertices) adj[v];
        for (auto [u, v] : comp.edges) {
            adj[u].insert(v);
            adj[v].insert(u);
        }
        std::vector<Peeled> peeled;
        while (true) {
            int pick = -1;
            for (int v : comp.vertices) {
                auto it = adj.find(v);
                if (it != adj.end() && it->second.size() <= 1 && (pick < 0 || v < pick))
                    pick = v;
            }
            if (pick < 0) break;
            auto& nbrs = adj.at(pick);
            std::optional<int> parent;
            if (!nbrs.empty()) {
                parent = *nbrs.begin();
                adj.at(*parent).erase(pick);
            }
            peeled.push_back({pick, parent});
            adj.erase(pick);
        }
        return peeled;
    }

    void colour_component(const RealizedGraph& comp) {
        if (is_path(comp)) {
            MultiColouring part = colour_path_greedy(path_order(comp), lists, m);
            phi.colours.merge(part.colours);
            return;
        }

        std::vector<Peeled> peeled = peel_pendants(comp);

        if (static_cast<int>(peeled.size()) < comp.vertex_count()) {
            // cyclic core of minimum degree 2; girth >= k guarantees a chain
            std::vector<int> gone;
            gone.reserve(peeled.size());
            for (const Peeled& p : peeled) gone.push_back(p.vertex);
            RealizedGraph core = remove_vertices(comp, gone);
            // interior degree constraints are what matter for the extension;
            // the original terminal pair plays no role inside the recursion
            core.terminals.reset();

            auto chain = find_removable_chain(core, chain_len);
            if (!chain)
                throw PreconditionError(
                    "colour_sp: component has no removable chain of length " +
                    std::to_string(chain_len) +
                    "; the input is not a series-parallel graph of the promised girth");
            if (trace) trace->removed.push_back(*chain);

            std::vector<int> interior(chain->vertices.begin() + 1, chain->vertices.end() - 1);
            colour_graph(remove_vertices(core, interior));

            // extend across the chain, pinned to the recursion's end sets
            const ColourSet& left = phi.colours.at(chain->vertices.front());
            const ColourSet& right = phi.colours.at(chain->vertices.back());
            ListAssignment pinned;
            pinned[chain->vertices.front()] = left;
            pinned[chain->vertices.back()] = right;
            for (int v : interior) pinned[v] = lists.at(v);
            MultiColouring part =
                colour_path_pinned(chain->vertices, pinned, m, slack, left, right);
            for (int v : interior) phi.colours[v] = part.colours.at(v);
        }

        // hang the peeled vertices back on, innermost first
        for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) {
            const ColourSet& list = lists.at(it->vertex);
            ColourSet avoid = it->parent ? phi.colours.at(*it->parent) : ColourSet{};
            phi.colours[it->vertex] = list.minus(avoid).take_smallest(m);
        }
    }
};

} // namespace

MultiColouring colour_sp(const RealizedGraph& g, const ListAssignment& lists, int m, int k,
                         ChainTrace* trace) {
    if (m < 1) throw PreconditionError("colour_sp: m must be positive");
    int q = choosability_q(k);
    int e = (m + q - 1) / q;

    if (auto gv = girth(g); gv && *gv < k)
        throw PreconditionError("colour_sp: girth " + std::to_string(*gv) +
                                " is below the required " + std::to_string(k));

    // forest components colour greedily and only need 2m colours per list;
    // anything with a cycle goes through the chain recursion and needs 2m+e
    std::map<int, int> required;
    for (const std::vector<int>& comp : connected_components(g)) {
        std::unordered_set<int> keep(comp.begin(), comp.end());
        std::vector<int> others;
        for (int v : g.vertices)
            if (!keep.count(v)) others.push_back(v);
        RealizedGraph sub = remove_vertices(g, others);
        bool tree = sub.edge_count() == sub.vertex_count() - 1;
        for (int v : comp) required[v] = tree ? 2 * m : 2 * m + e;
    }
    if (ValidityReport sizes = validate_list_sizes(g, lists, required); !sizes.ok())
        throw PreconditionError("colour_sp: lists too small\n" + sizes.to_string());

    SpColourer colourer{lists, m, (k + 1) / 2, e, MultiColouring{m, {}}, trace};
    colourer.colour_graph(g);
    return std::move(colourer.phi);
}

} // namespace spc
