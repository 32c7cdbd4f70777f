#ifndef PLCAT_GF2_HPP
#define PLCAT_GF2_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "plcat/bitset.hpp"

namespace plcat::gf2 {

// Dense GF(2) matrix, one Bitset per row.
struct Matrix {
    std::size_t cols = 0;
    std::vector<Bitset> rows;

    Matrix() = default;
    Matrix(std::size_t nrows, std::size_t ncols) : cols(ncols), rows(nrows, Bitset(ncols)) {}
    std::size_t row_count() const { return rows.size(); }
};

// Row echelon form of `m` (in place). Returns, per pivot, the column index in
// elimination order; rank = number of pivots. Elimination of non-pivot rows is
// the data-parallel kernel; the parallel path is bit-identical to the serial
// one because the row XORs are independent.
std::vector<int> rref_serial(Matrix& m);
std::vector<int> rref_parallel(Matrix& m);
std::vector<int> rref(Matrix& m);

std::size_t rank(Matrix m);

// Solves A x = b; returns a solution with free variables set to 0, or nullopt
// when the system is inconsistent.
std::optional<Bitset> solve(const Matrix& a, const Bitset& b);

// Basis of { x : A x = 0 }.
std::vector<Bitset> kernel_basis(const Matrix& a);

// Rank of the span of the given vectors (each of equal length).
std::size_t span_rank(const std::vector<Bitset>& vectors);

// True iff v lies in the GF(2) span of `vectors`.
bool in_span(const std::vector<Bitset>& vectors, const Bitset& v);

}  // namespace plcat::gf2

#endif
