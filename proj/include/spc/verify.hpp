#pragma once

#include "spc/gadget.hpp"
#include "spc/solvers.hpp"

namespace spc {

struct GadgetDefect {
    long long pair_index = -1;
    ColourSet s, t;
    MultiColouring witness; // a colouring of the designated path pinned to (s, t)
};

// Per-pair verdicts for a gadget bundle. all_uncolourable == true certifies
// that the bundle admits no m-fold colouring from its lists: any colouring
// would assign some pair (S, T) to the terminals, and the pinned check on the
// designated path rules every pair out.
struct GadgetCertificate {
    long long pairs_checked = 0;
    bool all_uncolourable = false;
    std::vector<GadgetDefect> defects; // empty unless the bundle is broken
    long long runtime_ms = 0;
};

// Serial reference implementation.
GadgetCertificate verify_gadget_serial(const GadgetBundle& bundle);

// OpenMP kernel over the independent (S, T) checks; results are aggregated in
// pair order, so the certificate is identical to the serial one. workers = 0
// uses the runtime default thread count.
GadgetCertificate verify_gadget(const GadgetBundle& bundle, int workers = 0);

// Structural validation shared by both entry points: pairing must be a
// bijection onto the paths, paths must live in the graph with the declared
// terminals, and the terminal lists must match. Throws PreconditionError.
void validate_bundle(const GadgetBundle& bundle);

} // namespace spc
