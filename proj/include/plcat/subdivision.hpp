#ifndef PLCAT_SUBDIVISION_HPP
#define PLCAT_SUBDIVISION_HPP

#include <memory>

#include "plcat/complex.hpp"

namespace plcat {

// Subdivision with carrier tracking: for every child simplex, the smallest
// parent simplex containing it.
struct SubdivisionMap {
    std::shared_ptr<const Complex2> parent, child;
    std::vector<SimplexRef> vertex_carrier;    // child vertex id -> parent simplex
    std::vector<SimplexRef> edge_carrier;      // child edge id -> parent simplex
    std::vector<SimplexRef> triangle_carrier;  // child triangle id -> parent simplex

    SimplexRef carrier(const SimplexRef& s) const {
        switch (s.dim) {
            case 0: return vertex_carrier[s.id];
            case 1: return edge_carrier[s.id];
            default: return triangle_carrier[s.id];
        }
    }
};

SubdivisionMap identity_subdivision(std::shared_ptr<const Complex2> k);

// Standard barycentric subdivision: one child vertex per parent simplex,
// child triangles along flags v < edge < triangle.
SubdivisionMap barycentric(std::shared_ptr<const Complex2> k);

struct SevenPart {
    SubdivisionMap map;
    TriangleId middle_triangle;  // child id of the central triangle
};

// Replaces triangle abc by a central triangle a'b'c' and a six-triangle ring
// {a,b,a'},{b,a',b'},{b,c,b'},{c,b',c'},{c,a,c'},{a,c',a'}; the edges ab, bc,
// ca stay unsubdivided and the rest of the complex is untouched.
SevenPart seven_part(std::shared_ptr<const Complex2> k, TriangleId tri);

// All child simplices whose carrier lies in l.
SubcomplexMask corresponding_subcomplex(const SubdivisionMap& m, const SubcomplexMask& l);

// Carrier composition; m2.parent must be the same complex as m1.child
// (pointer or content equality; ids are translated via labels when needed).
SubdivisionMap compose(const SubdivisionMap& m1, const SubdivisionMap& m2);

// Structural sanity: carriers respect faces and every parent simplex carries
// at least one child simplex.
bool verify_subdivision_map(const SubdivisionMap& m);

}  // namespace plcat

#endif
