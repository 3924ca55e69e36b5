#pragma once

#include <vector>

#include "spc/colouring.hpp"

namespace spc {

// Reservation sets T_0..T_l for a path whose first list has exactly m colours
// and whose later lists are truncated to their 2m+e smallest colours.
//
// The guarantee: any m-set B inside lists[j] that meets tsets[j] in at least
// tset_threshold(m, e, j) colours can be reached, i.e. the prefix path
// v_0..v_j has a colouring ending in exactly B (see extend_to_target).
struct TSetCertificate {
    int m = 0;
    int e = 0;                    // interior slack; lists[j] has 2m+e colours
    std::vector<ColourSet> lists; // truncated lists actually used, 0..l
    std::vector<ColourSet> tsets; // |T_j| = m for even j, m+e for odd j

    int length() const { return static_cast<int>(tsets.size()) - 1; }
};

// max(0, m - floor(j/2) * e)
int tset_threshold(int m, int e, int j);

// Forward pass. Requires |path_lists[0]| == m and |path_lists[j]| >= 2m+e for
// j >= 1 (larger lists are truncated to their 2m+e smallest colours first).
TSetCertificate build_t_sets(const std::vector<ColourSet>& path_lists, int m, int e);

// Backward pass: m-sets B_0..B_j with B_j == target, consecutive sets
// disjoint, each drawn from its (truncated) list. Requires
// |target ∩ T_j| >= tset_threshold(m, e, j).
std::vector<ColourSet> extend_to_target(const TSetCertificate& cert, int j,
                                        const ColourSet& target);

// Colours the path with both end sets pinned: phi(v_0) = m1 = L(v_0),
// phi(v_l) = m2 = L(v_l). Interior lists need >= 2m+e colours and the slack
// must satisfy floor(l/2) * e >= m. l >= 2.
MultiColouring colour_path_pinned(const std::vector<int>& path, const ListAssignment& lists,
                                  int m, int e, const ColourSet& m1, const ColourSet& m2);

// Single forward walk taking the m smallest colours not used by the previous
// vertex; lists need >= 2m colours. Also accepts a single vertex.
MultiColouring colour_path_greedy(const std::vector<int>& path, const ListAssignment& lists,
                                  int m);

} // namespace spc
