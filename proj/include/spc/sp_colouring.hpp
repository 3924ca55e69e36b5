#pragma once

#include "spc/path_colouring.hpp"

namespace spc {

// Sequence of removed chains, in removal order (for the CLI --trace flag).
struct ChainTrace {
    std::vector<Chain> removed;
};

// q = floor((k+1)/4); k in {4q-1, 4q, 4q+1, 4q+2}.
int choosability_q(int k);

// ceil((2 + 1/q) m) = 2m + ceil(m/q): the list size colour_sp needs.
int required_list_size(int k, int m);

// The critical ratio (2q+1)/q as an exact reduced fraction: lists of size
// ceil(ratio * m) always colour (colour_sp), one colour less admits built
// counterexamples (build_gadget).
std::pair<long long, long long> critical_ratio(int k);

// Colours a series-parallel graph of girth >= k from lists of size at least
// required_list_size(k, m): path components are coloured greedily; otherwise
// a chain of length ceil(k/2) is removed, the rest is coloured recursively,
// and the chain interior is filled in with colour_path_pinned using the
// recursion's end sets as pins. Components are handled independently.
//
// Throws PreconditionError when the girth or a list is too small, or when a
// non-path component has no removable chain (the input is then not a
// series-parallel graph of the promised girth).
MultiColouring colour_sp(const RealizedGraph& g, const ListAssignment& lists, int m, int k,
                         ChainTrace* trace = nullptr);

} // namespace spc
