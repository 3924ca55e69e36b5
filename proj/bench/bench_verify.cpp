// Times the serial reference against the OpenMP kernel on one gadget bundle
// and checks that both produce the same certificate.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "spc/gadget.hpp"
#include "spc/verify.hpp"

using Clock = std::chrono::steady_clock;

static double run_ms(const std::function<spc::GadgetCertificate()>& fn,
                     spc::GadgetCertificate& out) {
    auto start = Clock::now();
    out = fn();
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

int main(int argc, char** argv) {
    int k = argc > 1 ? std::atoi(argv[1]) : 7;
    int m = argc > 2 ? std::atoi(argv[2]) : 3;
    int e = argc > 3 ? std::atoi(argv[3]) : 1;
    int reps = argc > 4 ? std::atoi(argv[4]) : 3;

    std::printf("building gadget k=%d m=%d e=%d...\n", k, m, e);
    spc::GadgetBundle bundle = spc::build_gadget(k, m, e);
    std::printf("  %lld paths, %d vertices, %d edges\n", bundle.p,
                bundle.graph.vertex_count(), bundle.graph.edge_count());

#ifdef _OPENMP
    int threads = omp_get_max_threads();
#else
    int threads = 1;
#endif

    double best_serial = 1e30;
    double best_parallel = 1e30;
    for (int r = 0; r < reps; ++r) {
        spc::GadgetCertificate serial, parallel;
        double ts = run_ms([&] { return spc::verify_gadget_serial(bundle); }, serial);
        double tp = run_ms([&] { return spc::verify_gadget(bundle, 0); }, parallel);
        best_serial = std::min(best_serial, ts);
        best_parallel = std::min(best_parallel, tp);

        bool same = serial.pairs_checked == parallel.pairs_checked &&
                    serial.all_uncolourable == parallel.all_uncolourable &&
                    serial.defects.size() == parallel.defects.size();
        std::printf("  rep %d: serial %8.2f ms | parallel(%d) %8.2f ms | certificates %s\n",
                    r, ts, threads, tp, same ? "match" : "DIFFER");
        if (!same) return 1;
    }
    std::printf("best: serial %.2f ms, parallel %.2f ms, speedup %.2fx on %d threads\n",
                best_serial, best_parallel, best_serial / best_parallel, threads);
    return 0;
}
