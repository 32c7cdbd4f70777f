#ifndef PLCAT_ENRICHMENT_HPP
#define PLCAT_ENRICHMENT_HPP

#include <array>
#include <memory>

#include "plcat/collapse.hpp"
#include "plcat/complex.hpp"

namespace plcat {

// Triangulated torus on a 3x3 vertex grid (rows i, columns j mod 3): row,
// column and diagonal edges, 18 triangles. The longitude is the row-0 circle;
// annulus1 is the closed band between rows 0 and 1, annulus2 the band through
// row 2 back to row 0. Both annuli share the longitude on a boundary.
struct TorusBlock {
    Complex2 complex;
    SubcomplexMask longitude, annulus1, annulus2;
};

// longitude_labels become row 0 (in order v00,v01,v02); interior_labels fill
// rows 1 and 2. Throws LabelCollisionError on repeated labels.
TorusBlock torus_block(const std::array<std::string, 3>& longitude_labels,
                       const std::array<std::string, 6>& interior_labels);

// Handles of one glued torus inside an enriched complex.
struct TorusHandles {
    TriangleId base_triangle = -1;  // id of the base triangle in the enriched complex
    SubcomplexMask torus, longitude, annulus1, annulus2;
};

// Enriched complex: the base plus one torus glued along the boundary of each
// base triangle (longitude identified with the triangle boundary).
struct ComplexPlus {
    std::shared_ptr<const Complex2> complex;
    SubcomplexMask base;
    std::vector<TorusHandles> tori;  // ordered by base triangle
};

// Glues a fresh torus to every triangle of k; interior vertices are labeled
// t<i>_r<row>c<col>. Adds 6 vertices, 24 edges and 18 triangles per triangle.
ComplexPlus enrich(const Complex2& k);

// Invariant check for enriched complexes (torus topology, annulus collapses,
// torus-meets-base exactly in the longitude). Throws on violation.
void validate_complex_plus(const ComplexPlus& kp);

// From two collapsible subcomplexes of the base that both contain the whole
// base 1-skeleton and together cover it, builds the two enriched cover pieces
// (each base piece plus one annulus per torus) and verifies both collapse.
// Throws PreconditionViolationError naming the failed clause.
std::pair<SubcomplexMask, SubcomplexMask> cover_from_pair(const ComplexPlus& kp,
                                                          const SubcomplexMask& k1,
                                                          const SubcomplexMask& k2);

// Necessary condition on a 2-piece cover (q1, q2) at one glued torus: with R
// = everything but that torus interior, the longitude must lie in both pieces
// and bound in R∩q1 and in R∩q2. Throws NotACoverError when q1∪q2 is not
// everything.
bool torus_obstruction(const ComplexPlus& kp, const SubcomplexMask& q1, const SubcomplexMask& q2,
                       std::size_t torus_index);

}  // namespace plcat

#endif
