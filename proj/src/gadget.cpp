#include "spc/gadget.hpp"

#include <string>

#include "spc/colour_set.hpp"
#include "spc/errors.hpp"

namespace spc {

GadgetBundle build_gadget(int k, int m, int e) {
    if (k < 3) throw PreconditionError("build_gadget: k must be >= 3");
    if (m < 1 || e < 1) throw PreconditionError("build_gadget: m and e must be positive");
    const int q = (k + 1) / 4;
    if (q * e >= m)
        throw PreconditionError("build_gadget: needs q*e < m (q = " + std::to_string(q) +
                                ", e = " + std::to_string(e) + ", m = " + std::to_string(m) +
                                "); the smallest legal fold at this slack is m = " +
                                std::to_string(q * e + 1));

    GadgetBundle bundle;
    bundle.k = k;
    bundle.m = m;
    bundle.e = e;
    bundle.q = q;
    bundle.l = (k + 1) / 2; // ceil(k/2)

    const int list_size = 2 * m + e;
    bundle.x_list = fresh_colours(list_size, {});
    bundle.y_list = fresh_colours(list_size, bundle.x_list);
    const ColourSet terminals_universe = bundle.x_list.unite(bundle.y_list);

    std::vector<ColourSet> s_choices = enumerate_m_subsets(bundle.x_list, m);
    std::vector<ColourSet> t_choices = enumerate_m_subsets(bundle.y_list, m);
    const long long p = static_cast<long long>(s_choices.size()) *
                        static_cast<long long>(t_choices.size());
    bundle.p = p;

    const int x = 0;
    const int y = 1;
    const int per_path = bundle.l - 1; // interior vertices of one path

    std::vector<int> vertices;
    vertices.reserve(2 + static_cast<std::size_t>(p) * per_path);
    vertices.push_back(x);
    vertices.push_back(y);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(p) * bundle.l);

    bundle.lists[x] = bundle.x_list;
    bundle.lists[y] = bundle.y_list;
    bundle.pairing.reserve(static_cast<std::size_t>(p));

    int next_id = 2;
    for (const ColourSet& s : s_choices) {
        for (const ColourSet& t : t_choices) {
            // same `used` for every pair, so fresh_colours allocates one
            // shared block layout across all paths
            BadPathList bad = bad_path_list(bundle.l, m, e, s, t, terminals_universe);
            if (bundle.blocks.empty()) bundle.blocks = bad.spec.blocks;
            else if (bundle.blocks != bad.spec.blocks)
                throw Error("build_gadget: block layout diverged between paths");

            GadgetBundle::PairEntry entry;
            entry.s = s;
            entry.t = t;
            entry.path.reserve(static_cast<std::size_t>(bundle.l) + 1);
            entry.path.push_back(x);
            for (int i = 0; i < per_path; ++i) {
                int v = next_id++;
                vertices.push_back(v);
                entry.path.push_back(v);
                bundle.lists[v] = bad.lists[static_cast<std::size_t>(i) + 1];
            }
            entry.path.push_back(y);
            for (std::size_t i = 0; i + 1 < entry.path.size(); ++i)
                edges.push_back({entry.path[i], entry.path[i + 1]});
            bundle.pairing.push_back(std::move(entry));
        }
    }

    bundle.graph = make_graph(std::move(vertices), std::move(edges), {{x, y}});
    return bundle;
}

} // namespace spc
