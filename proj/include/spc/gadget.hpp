#pragma once

#include "spc/bad_lists.hpp"
#include "spc/graph.hpp"

namespace spc {

// p = C(2m+e, m)^2 paths of length l = ceil(k/2) in parallel between the
// terminals x and y. L(x) and L(y) are disjoint (2m+e)-sets; each pair (S, T)
// of end m-subsets designates one path whose interior lists defeat exactly
// that pin. One shared block layout serves every path: interiors of distinct
// paths are never adjacent.
struct GadgetBundle {
    struct PairEntry {
        ColourSet s, t;
        std::vector<int> path; // x, interiors..., y
    };

    RealizedGraph graph;
    ListAssignment lists;
    ColourSet x_list, y_list;
    std::vector<PairEntry> pairing; // lexicographic by (s, t)
    std::map<std::string, ColourSet> blocks;
    int k = 0, m = 0, e = 0, q = 0, l = 0;
    long long p = 0;
};

// Requires k >= 3, e >= 1 and q*e < m where q = floor((k+1)/4).
GadgetBundle build_gadget(int k, int m, int e);

} // namespace spc
