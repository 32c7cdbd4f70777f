#include "plcat/parallel.hpp"

#include <algorithm>
#include <atomic>

#ifdef PLCAT_OPENMP
#include <omp.h>
#endif

namespace plcat::parallel {

namespace {
int g_max_threads = 0;
}

void set_max_threads(int n) { g_max_threads = n < 0 ? 0 : n; }

int max_threads() {
#ifdef PLCAT_OPENMP
    if (g_max_threads > 0) return g_max_threads;
    return omp_get_max_threads();
#else
    return 1;
#endif
}

int workers_for(std::uint64_t work_items) {
    int t = max_threads();
    if (work_items < 256) return 1;
    return static_cast<int>(std::min<std::uint64_t>(t, work_items / 64 + 1));
}

FirstSuccess first_success_serial(std::uint64_t total, std::uint64_t budget,
                                  const std::function<bool(std::uint64_t)>& pred) {
    FirstSuccess r;
    std::uint64_t cap = std::min(total, budget);
    for (std::uint64_t i = 0; i < cap; ++i) {
        if (pred(i)) {
            r.rank = i;
            r.examined = i + 1;
            r.exhausted = false;
            return r;
        }
    }
    r.examined = cap;
    r.exhausted = cap == total;
    return r;
}

FirstSuccess first_success_parallel(std::uint64_t total, std::uint64_t budget,
                                    const std::function<bool(std::uint64_t)>& pred) {
#ifndef PLCAT_OPENMP
    return first_success_serial(total, budget, pred);
#else
    std::uint64_t cap = std::min(total, budget);
    int nthreads = workers_for(cap);
    if (nthreads <= 1) return first_success_serial(total, budget, pred);

    std::atomic<std::uint64_t> best{cap};
#pragma omp parallel for schedule(dynamic, 64) num_threads(nthreads)
    for (long long i = 0; i < static_cast<long long>(cap); ++i) {
        std::uint64_t rank = static_cast<std::uint64_t>(i);
        if (rank >= best.load(std::memory_order_relaxed)) continue;
        if (pred(rank)) {
            std::uint64_t cur = best.load(std::memory_order_relaxed);
            while (rank < cur && !best.compare_exchange_weak(cur, rank)) {
            }
        }
    }

    FirstSuccess r;
    std::uint64_t b = best.load();
    if (b < cap) {
        r.rank = b;
        r.examined = b + 1;
        r.exhausted = false;
    } else {
        r.examined = cap;
        r.exhausted = cap == total;
    }
    return r;
#endif
}

FirstSuccess first_success(std::uint64_t total, std::uint64_t budget,
                           const std::function<bool(std::uint64_t)>& pred) {
    if (workers_for(std::min(total, budget)) > 1) return first_success_parallel(total, budget, pred);
    return first_success_serial(total, budget, pred);
}

}  // namespace plcat::parallel
