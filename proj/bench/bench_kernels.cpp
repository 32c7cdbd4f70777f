// Compares the serial reference kernels against their OpenMP counterparts:
// GF(2) elimination, the SAT assignment sweep, and the candidate-pair sweep
// behind the cover search. Every pair must also agree on its result.

#include <cstdio>
#include <random>
#include <string>

#ifdef PLCAT_OPENMP
#include <omp.h>
#endif

#include "plcat/enrichment.hpp"
#include "plcat/gadget.hpp"
#include "plcat/gf2.hpp"
#include "plcat/homology.hpp"
#include "plcat/parallel.hpp"
#include "plcat/plgcat.hpp"
#include "plcat/sat.hpp"

using namespace plcat;

namespace {

double now_seconds() {
#ifdef PLCAT_OPENMP
    return omp_get_wtime();
#else
    return static_cast<double>(clock()) / CLOCKS_PER_SEC;
#endif
}

template <typename Fn>
double best_of(int reps, Fn&& fn) {
    double best = 1e30;
    for (int i = 0; i < reps; ++i) {
        double t0 = now_seconds();
        fn();
        best = std::min(best, now_seconds() - t0);
    }
    return best;
}

void report(const std::string& name, double serial, double parallel, bool equal) {
    std::printf("%-28s %10.3f ms %10.3f ms %7.2fx   %s\n", name.c_str(), serial * 1e3,
                parallel * 1e3, parallel > 0 ? serial / parallel : 0.0,
                equal ? "results equal" : "RESULTS DIFFER");
}

void bench_gf2() {
    std::mt19937_64 rng(42);
    gf2::Matrix m(1200, 1600);
    for (auto& row : m.rows)
        for (std::size_t c = 0; c < m.cols; ++c)
            if (rng() & 1) row.set(c);

    std::size_t rank_serial = 0, rank_parallel = 0;
    double ts = best_of(3, [&] {
        gf2::Matrix a = m;
        rank_serial = gf2::rref_serial(a).size();
    });
    double tp = best_of(3, [&] {
        gf2::Matrix a = m;
        rank_parallel = gf2::rref_parallel(a).size();
    });
    report("gf2 elimination 1200x1600", ts, tp, rank_serial == rank_parallel);
}

void bench_sat() {
    // embedded contradiction forces the full 2^22 sweep
    Formula f;
    f.num_vars = 22;
    for (int s0 : {1, -1})
        for (int s1 : {2, -2})
            for (int s2 : {3, -3}) f.clauses.push_back({s0, s1, s2});
    std::mt19937_64 rng(7);
    for (int i = 0; i < 120; ++i) {
        int a = 1 + static_cast<int>(rng() % 22), b = 1 + static_cast<int>(rng() % 22),
            c = 1 + static_cast<int>(rng() % 22);
        if (a == b || b == c || a == c) continue;
        f.clauses.push_back({rng() & 1 ? a : -a, rng() & 1 ? b : -b, rng() & 1 ? c : -c});
    }

    std::optional<std::vector<bool>> rs, rp;
    double ts = best_of(2, [&] { rs = sat_bruteforce_serial(f); });
    double tp = best_of(2, [&] { rp = sat_bruteforce_parallel(f); });
    report("sat sweep 2^22 (unsat)", ts, tp, rs == rp);
}

void bench_cover_sweep() {
    TorusBlock tb = torus_block({"l0", "l1", "l2"}, {"i0", "i1", "i2", "i3", "i4", "i5"});
    CoverSearchResult rs, rp;
    double ts = best_of(1, [&] {
        parallel::set_max_threads(1);
        rs = cover_search_closure_sweep(tb.complex, 1u << 16);
    });
    double tp = best_of(1, [&] {
        parallel::set_max_threads(0);
        rp = cover_search_closure_sweep(tb.complex, 1u << 16);
    });
    report("cover closure sweep (torus)", ts, tp,
           rs.status == rp.status && rs.candidates == rp.candidates);
}

void bench_betti() {
    GadgetComplex g = toy_gadget(8);
    ComplexPlus kp = enrich(g.complex);
    Betti bs, bp;
    double ts = best_of(2, [&] {
        parallel::set_max_threads(1);
        bs = betti(*kp.complex);
    });
    double tp = best_of(2, [&] {
        parallel::set_max_threads(0);
        bp = betti(*kp.complex);
    });
    report("betti of an enriched gadget", ts, tp, bs == bp);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) parallel::set_max_threads(std::atoi(argv[1]));
#ifdef PLCAT_OPENMP
    std::printf("OpenMP enabled, max threads %d\n\n", parallel::max_threads());
#else
    std::printf("built without OpenMP; both columns run the serial path\n\n");
#endif
    std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "openmp", "speedup");
    bench_gf2();
    bench_sat();
    bench_betti();
    bench_cover_sweep();
    return 0;
}
