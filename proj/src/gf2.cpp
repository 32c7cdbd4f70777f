#include "plcat/gf2.hpp"

#include <cassert>

#include "plcat/parallel.hpp"

namespace plcat::gf2 {

namespace {

template <bool Parallel>
std::vector<int> rref_impl(Matrix& m) {
    std::vector<int> pivot_cols;
    std::size_t nrows = m.rows.size();
    std::size_t next_row = 0;
    for (std::size_t col = 0; col < m.cols && next_row < nrows; ++col) {
        // Lowest remaining row with a bit in this column becomes the pivot.
        std::size_t pivot = nrows;
        for (std::size_t r = next_row; r < nrows; ++r) {
            if (m.rows[r].test(col)) {
                pivot = r;
                break;
            }
        }
        if (pivot == nrows) continue;
        std::swap(m.rows[next_row], m.rows[pivot]);
        const Bitset& prow = m.rows[next_row];

        if constexpr (Parallel) {
#ifdef PLCAT_OPENMP
            int nt = parallel::workers_for(nrows);
#pragma omp parallel for schedule(static) num_threads(nt)
            for (long long r = 0; r < static_cast<long long>(nrows); ++r) {
                if (static_cast<std::size_t>(r) != next_row && m.rows[r].test(col))
                    m.rows[r] ^= prow;
            }
#else
            for (std::size_t r = 0; r < nrows; ++r)
                if (r != next_row && m.rows[r].test(col)) m.rows[r] ^= prow;
#endif
        } else {
            for (std::size_t r = 0; r < nrows; ++r)
                if (r != next_row && m.rows[r].test(col)) m.rows[r] ^= prow;
        }
        pivot_cols.push_back(static_cast<int>(col));
        ++next_row;
    }
    return pivot_cols;
}

}  // namespace

std::vector<int> rref_serial(Matrix& m) { return rref_impl<false>(m); }
std::vector<int> rref_parallel(Matrix& m) { return rref_impl<true>(m); }

std::vector<int> rref(Matrix& m) {
    // the per-pivot row loop only amortizes the fork overhead on big matrices
    if (m.rows.size() >= 4096 && parallel::workers_for(m.rows.size()) > 1)
        return rref_parallel(m);
    return rref_serial(m);
}

std::size_t rank(Matrix m) { return rref(m).size(); }

std::optional<Bitset> solve(const Matrix& a, const Bitset& b) {
    assert(b.size() == a.rows.size());
    // Augment with b as an extra column and reduce.
    Matrix aug(a.rows.size(), a.cols + 1);
    for (std::size_t r = 0; r < a.rows.size(); ++r) {
        for (int c : a.rows[r].ones()) aug.rows[r].set(c);
        if (b.test(r)) aug.rows[r].set(a.cols);
    }
    std::vector<int> pivots = rref(aug);
    Bitset x(a.cols);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == static_cast<int>(a.cols)) return std::nullopt;
        if (aug.rows[r].test(a.cols)) x.set(pivots[r]);
    }
    return x;
}

std::vector<Bitset> kernel_basis(const Matrix& a) {
    Matrix m = a;
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(a.cols, false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<Bitset> basis;
    for (std::size_t f = 0; f < a.cols; ++f) {
        if (is_pivot[f]) continue;
        Bitset v(a.cols);
        v.set(f);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            if (m.rows[r].test(f)) v.set(pivots[r]);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t span_rank(const std::vector<Bitset>& vectors) {
    if (vectors.empty()) return 0;
    Matrix m(vectors.size(), vectors.front().size());
    m.rows = vectors;
    return rref(m).size();
}

bool in_span(const std::vector<Bitset>& vectors, const Bitset& v) {
    std::vector<Bitset> with = vectors;
    with.push_back(v);
    return span_rank(with) == span_rank(vectors);
}

}  // namespace plcat::gf2
