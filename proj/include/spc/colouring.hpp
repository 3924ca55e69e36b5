#pragma once

#include <map>
#include <string>
#include <vector>

#include "spc/colour_set.hpp"
#include "spc/graph.hpp"

namespace spc {

using ListAssignment = std::map<int, ColourSet>;

// An m-fold colouring: each coloured vertex holds a set of exactly `fold`
// colours. Partial colourings are allowed; the domain may be any subset of
// the host graph's vertices.
struct MultiColouring {
    int fold = 0;
    std::map<int, ColourSet> colours;

    bool has(int v) const { return colours.count(v) != 0; }
    const ColourSet& at(int v) const { return colours.at(v); }
};

struct Violation {
    enum class Kind {
        WrongFoldSize, // |phi(v)| != m
        NotInList,     // phi(v) not a subset of L(v)
        EdgeOverlap,   // adjacent coloured vertices share a colour
        UnknownVertex, // coloured vertex not in the graph
        MissingList,   // vertex has no list
        ListTooSmall,  // |L(v)| below the required bound
    };

    Kind kind;
    int vertex = -1;
    int other = -1; // second endpoint for EdgeOverlap
    std::string detail;
};

struct ValidityReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string to_string() const;
};

// Checks (a) fold size, (b) list containment, (c) disjointness across every
// edge whose two ends are both coloured. Violations are data, not errors.
ValidityReport check_colouring(const RealizedGraph& g, const ListAssignment& lists,
                               const MultiColouring& phi, int m);

// Reports vertices whose list is absent or smaller than the stated bound.
ValidityReport validate_list_sizes(const RealizedGraph& g, const ListAssignment& lists,
                                   const std::map<int, int>& required);

} // namespace spc
