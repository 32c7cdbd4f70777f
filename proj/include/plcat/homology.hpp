#ifndef PLCAT_HOMOLOGY_HPP
#define PLCAT_HOMOLOGY_HPP

#include <vector>

#include "plcat/complex.hpp"
#include "plcat/gf2.hpp"

namespace plcat {

// GF(2) chain: a set of simplices in one dimension.
struct Chain {
    int dim = 0;
    Bitset bits;
};

Chain chain_from_mask_edges(const SubcomplexMask& m);

// Boundary matrix: rows = (dim-1)-simplices, cols = dim-simplices.
gf2::Matrix boundary_matrix(const Complex2& k, int dim);

// Mod-2 boundary of a 1- or 2-chain. Throws DimensionMismatchError.
Chain boundary(const Complex2& k, const Chain& c);

struct Betti {
    int b0 = 0, b1 = 0, b2 = 0;
    bool operator==(const Betti& o) const { return b0 == o.b0 && b1 == o.b1 && b2 == o.b2; }
};

Betti betti(const Complex2& k);

struct NullhomologyResult {
    bool nullhomologous = false;
    Chain filling;  // 2-chain witness when nullhomologous
};

// True iff the 1-cycle z bounds mod 2; returns the filling 2-chain.
// Throws NotACycleError when boundary(z) != 0.
NullhomologyResult is_nullhomologous(const Complex2& k, const Chain& z);

// True iff ker d2 is spanned by the fundamental classes of the given
// pairwise-disjoint subcomplexes (so dim ker d2 == spheres.size() and no
// 2-cycle leaves their union). Throws SpheresNotDisjointError.
bool h2_supported_only_on(const Complex2& k, const std::vector<SubcomplexMask>& spheres);

}  // namespace plcat

#endif
