#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "spc/graph.hpp"

namespace spc {

// Expression tree describing a two-terminal series-parallel construction.
// Leaves are single edges; Series/Parallel nodes hold two or more children
// (n-ary nodes stand for the left-folded binary composition).
struct SPTerm {
    enum class Kind { Edge, Series, Parallel };

    Kind kind = Kind::Edge;
    std::vector<SPTerm> children; // empty for Edge, size >= 2 otherwise

    static SPTerm edge();
    static SPTerm series(std::vector<SPTerm> children);
    static SPTerm parallel(std::vector<SPTerm> children);

    bool operator==(const SPTerm&) const = default;
};

// Grammar:
//   term := "e" | "S(" term ("," term)+ ")" | "P(" term ("," term)+ ")"
//         | term "^" n | term "|" n
// "^n" is series power, "|n" parallel power, n >= 1; whitespace is ignored.
SPTerm parse_sp_expression(std::string_view text);

// Canonical form, re-parsable by parse_sp_expression.
std::string print_sp_expression(const SPTerm& term);

// n-fold composition of copies of term; n = 1 returns term unchanged.
SPTerm series_power(const SPTerm& term, int n);
SPTerm parallel_power(const SPTerm& term, int n);

// Replaces every edge leaf by a series chain of s edges. Every cycle of the
// realization scales by s, so the girth does too.
SPTerm series_stretch(const SPTerm& term, int s);

int leaf_count(const SPTerm& term);

// True when the realization contains the edge joining its own two terminals.
// A parallel node with two such children would realize a multi-edge.
bool has_terminal_edge(const SPTerm& term);

// Deterministic pseudo-random term with the given number of edge leaves,
// built by random binary series/parallel merges (parallel merges that would
// create a multi-edge fall back to series).
SPTerm random_sp_term(int leaves, std::uint64_t seed);

// Concrete graph with terminals (x, y). Vertex ids are assigned by a
// left-to-right traversal: the outer terminals get 0 and 1, identification
// vertices and interiors follow in construction order. Throws
// PreconditionError when the term would realize a multi-edge.
RealizedGraph realize(const SPTerm& term);

} // namespace spc
