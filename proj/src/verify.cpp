#include "spc/verify.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <string>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "spc/errors.hpp"

namespace spc {

namespace {

using Clock = std::chrono::steady_clock;

std::optional<MultiColouring> check_pair(const GadgetBundle& bundle, std::size_t index) {
    const GadgetBundle::PairEntry& entry = bundle.pairing[index];
    SolveOutcome out =
        solve_path_pinned_dp(entry.path, bundle.lists, bundle.m, entry.s, entry.t);
    if (out.found()) return out.colouring;
    return std::nullopt;
}

GadgetCertificate collect(const GadgetBundle& bundle,
                          const std::vector<std::optional<MultiColouring>>& hits,
                          Clock::time_point start) {
    GadgetCertificate cert;
    cert.pairs_checked = static_cast<long long>(hits.size());
    for (std::size_t i = 0; i < hits.size(); ++i) {
        if (!hits[i]) continue;
        GadgetDefect defect;
        defect.pair_index = static_cast<long long>(i);
        defect.s = bundle.pairing[i].s;
        defect.t = bundle.pairing[i].t;
        defect.witness = *hits[i];
        cert.defects.push_back(std::move(defect));
    }
    cert.all_uncolourable = cert.defects.empty();
    cert.runtime_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    return cert;
}

} // namespace

void validate_bundle(const GadgetBundle& bundle) {
    if (bundle.k < 3 || bundle.m < 1 || bundle.e < 1)
        throw PreconditionError("bundle: bad parameters");
    if (bundle.q != (bundle.k + 1) / 4 || bundle.l != (bundle.k + 1) / 2)
        throw PreconditionError("bundle: q or l inconsistent with k");
    if (bundle.q * bundle.e >= bundle.m)
        throw PreconditionError("bundle: parameters violate q*e < m");

    const int list_size = 2 * bundle.m + bundle.e;
    if (bundle.x_list.size() != list_size || bundle.y_list.size() != list_size)
        throw PreconditionError("bundle: terminal lists must have 2m+e colours");
    if (!bundle.x_list.disjoint_with(bundle.y_list))
        throw PreconditionError("bundle: terminal lists must be disjoint");
    if (!bundle.graph.terminals)
        throw PreconditionError("bundle: graph carries no terminals");

    const long long expected =
        static_cast<long long>(subset_count(list_size, bundle.m)) *
        static_cast<long long>(subset_count(list_size, bundle.m));
    if (bundle.p != expected || static_cast<long long>(bundle.pairing.size()) != expected)
        throw PreconditionError("bundle: pairing must cover all C(2m+e,m)^2 pin pairs, "
                                "expected " + std::to_string(expected) + ", have " +
                                std::to_string(bundle.pairing.size()));

    const int x = bundle.graph.terminals->first;
    const int y = bundle.graph.terminals->second;
    {
        auto lx = bundle.lists.find(x);
        auto ly = bundle.lists.find(y);
        if (lx == bundle.lists.end() || lx->second != bundle.x_list ||
            ly == bundle.lists.end() || ly->second != bundle.y_list)
            throw PreconditionError("bundle: terminal lists do not match X and Y");
    }

    // pairing must be a bijection: strictly increasing (S, T) keys, paths of
    // the right shape through the graph, interiors not shared between paths
    std::unordered_set<int> interior_seen;
    const GadgetBundle::PairEntry* prev = nullptr;
    for (const auto& entry : bundle.pairing) {
        if (entry.s.size() != bundle.m || entry.t.size() != bundle.m)
            throw PreconditionError("bundle: pair pins must be m-sets");
        if (!entry.s.subset_of(bundle.x_list) || !entry.t.subset_of(bundle.y_list))
            throw PreconditionError("bundle: pair pins must come from X and Y");
        if (prev && !(std::pair(prev->s, prev->t) < std::pair(entry.s, entry.t)))
            throw PreconditionError("bundle: pairing not in increasing (S, T) order");
        prev = &entry;

        if (static_cast<int>(entry.path.size()) != bundle.l + 1)
            throw PreconditionError("bundle: designated path has wrong length");
        if (entry.path.front() != x || entry.path.back() != y)
            throw PreconditionError("bundle: designated path must run from x to y");
        for (std::size_t i = 0; i + 1 < entry.path.size(); ++i)
            if (!bundle.graph.has_edge(entry.path[i], entry.path[i + 1]))
                throw PreconditionError("bundle: designated path uses a missing edge");
        for (std::size_t i = 1; i + 1 < entry.path.size(); ++i) {
            int v = entry.path[i];
            if (!interior_seen.insert(v).second)
                throw PreconditionError("bundle: paths share interior vertex " +
                                        std::to_string(v));
            if (!bundle.lists.count(v))
                throw PreconditionError("bundle: interior vertex " + std::to_string(v) +
                                        " has no list");
        }
    }
}

GadgetCertificate verify_gadget_serial(const GadgetBundle& bundle) {
    validate_bundle(bundle);
    auto start = Clock::now();
    std::vector<std::optional<MultiColouring>> hits(bundle.pairing.size());
    for (std::size_t i = 0; i < hits.size(); ++i) hits[i] = check_pair(bundle, i);
    return collect(bundle, hits, start);
}

GadgetCertificate verify_gadget(const GadgetBundle& bundle, int workers) {
    if (workers < 0) throw PreconditionError("verify_gadget: workers must be >= 0");
    validate_bundle(bundle);
    auto start = Clock::now();
    std::vector<std::optional<MultiColouring>> hits(bundle.pairing.size());

#ifdef _OPENMP
    const int threads = workers > 0 ? workers : omp_get_max_threads();
    std::string first_error;
    const long long n = static_cast<long long>(hits.size());
#pragma omp parallel for schedule(dynamic, 8) num_threads(threads)
    for (long long i = 0; i < n; ++i) {
        try {
            hits[static_cast<std::size_t>(i)] = check_pair(bundle, static_cast<std::size_t>(i));
        } catch (const std::exception& ex) {
            // exceptions must not unwind out of the parallel region
#pragma omp critical
            if (first_error.empty()) first_error = ex.what();
        }
    }
    if (!first_error.empty()) throw Error("verify_gadget: " + first_error);
#else
    (void)workers;
    for (std::size_t i = 0; i < hits.size(); ++i) hits[i] = check_pair(bundle, i);
#endif

    return collect(bundle, hits, start);
}

} // namespace spc
