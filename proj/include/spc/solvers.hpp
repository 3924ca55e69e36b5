#pragma once

#include "spc/colouring.hpp"

namespace spc {

struct SolveOutcome {
    enum class Kind { Colouring, NoColouring, BudgetExceeded };

    Kind kind = Kind::NoColouring;
    MultiColouring colouring; // populated for Kind::Colouring
    long long nodes = 0;      // search nodes explored

    bool found() const { return kind == Kind::Colouring; }
};

// Complete dynamic program over the m-subsets of each list along a path,
// transitions between disjoint consecutive choices, ends pinned to s and t.
// Witness colourings pick the lexicographically smallest state at each level.
// Never returns BudgetExceeded.
SolveOutcome solve_path_pinned_dp(const std::vector<int>& path, const ListAssignment& lists,
                                  int m, const ColourSet& s, const ColourSet& t);

// Exact backtracking over an arbitrary graph. Vertex order is breadth-first
// from the highest-degree vertex (ties by smaller id); at each vertex the
// m-subsets of its list disjoint from all coloured neighbours are tried in
// lexicographic order. The node budget separates an exhausted search
// (NoColouring) from an abandoned one (BudgetExceeded).
SolveOutcome solve_generic(const RealizedGraph& g, const ListAssignment& lists, int m,
                           long long budget = 50'000'000);

} // namespace spc
