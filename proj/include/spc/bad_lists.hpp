#pragma once

#include <map>
#include <string>

#include "spc/colouring.hpp"

namespace spc {

// Parameters and named colour blocks of an uncolourable pinned-path list
// family. q = floor(l/2); the lists defeat every colouring precisely in the
// regime q*e < m.
struct BadPathSpec {
    int l = 0;
    int m = 0;
    int e = 0;
    int q = 0;
    ColourSet m1, m2;                        // end pins, size m each
    std::map<std::string, ColourSet> blocks; // "A1", "B2", "Z1", ...

    const ColourSet& block(const std::string& name) const;
};

struct BadPathList {
    std::vector<ColourSet> lists; // positions 0..l; ends m1 / m2
    BadPathSpec spec;
};

// The block recipe alone: pins at the ends, every interior list of size
// exactly 2m+e partitioned into named blocks. The prefix-overlap property
// (check_prefix_overlap) holds for any slack; uncolourability does not. Requires
// l >= 2, e >= 1, and for l = 2 disjoint pins.
BadPathList bad_path_layout(int l, int m, int e, const ColourSet& m1, const ColourSet& m2,
                            const ColourSet& used = {});

// Lists over the path v_0..v_l with L(v_0) = m1, L(v_l) = m2, every interior
// list of size exactly 2m+e, admitting no m-fold colouring. Fresh blocks are
// drawn from the smallest colours outside used ∪ m1 ∪ m2. On top of the
// layout requirements this enforces floor(l/2)*e < m; with more slack the
// paths are always colourable.
BadPathList bad_path_list(int l, int m, int e, const ColourSet& m1, const ColourSet& m2,
                          const ColourSet& used = {});

struct PrefixOverlapReport {
    int j = 0;
    int prefix_end = 0;       // vertex index 2j-2
    long long colourings = 0; // prefix colourings inspected
    int min_overlap = -1;     // min |phi(v_{2j-2}) ∩ B_{2j-2}|, -1 if vacuous
    int bound = 0;            // m - (j-1)*e
    bool vacuous = false;     // no valid prefix colouring at all
    bool sampled = false;     // budget forced seeded sampling
    bool passes = false;
};

// Enumerates the m-fold colourings of the prefix P_{2j-2} of a bad path and
// reports the minimum overlap of the last vertex with block B_{2j-2};
// passes iff the minimum is >= m - (j-1)*e. Requires 2 <= j <= q and q >= 2.
// Instances whose state-space estimate exceeds `budget` are sampled instead
// of exhausted (flagged in the report).
PrefixOverlapReport check_prefix_overlap(const BadPathList& bad, int j, long long budget = 20'000'000);

} // namespace spc
