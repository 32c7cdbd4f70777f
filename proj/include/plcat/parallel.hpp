#ifndef PLCAT_PARALLEL_HPP
#define PLCAT_PARALLEL_HPP

#include <cstdint>
#include <functional>
#include <optional>

namespace plcat::parallel {

// Worker cap for all OpenMP kernels. 0 = library default.
void set_max_threads(int n);
int max_threads();
// Effective worker count for a job of the given size.
int workers_for(std::uint64_t work_items);

struct FirstSuccess {
    std::optional<std::uint64_t> rank;  // lowest-rank success among examined
    std::uint64_t examined = 0;         // canonical count: rank+1 on success, else min(total, budget)
    bool exhausted = false;             // every rank < total was examined
};

// Scans ranks 0..min(total,budget) for the lowest rank where pred(rank) is
// true. The parallel path still reports the canonical (lowest) success, so
// results are thread-count independent.
FirstSuccess first_success_serial(std::uint64_t total, std::uint64_t budget,
                                  const std::function<bool(std::uint64_t)>& pred);
FirstSuccess first_success_parallel(std::uint64_t total, std::uint64_t budget,
                                    const std::function<bool(std::uint64_t)>& pred);
FirstSuccess first_success(std::uint64_t total, std::uint64_t budget,
                           const std::function<bool(std::uint64_t)>& pred);

}  // namespace plcat::parallel

#endif
