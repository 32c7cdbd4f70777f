#ifndef PLCAT_COMPLEX_HPP
#define PLCAT_COMPLEX_HPP

#include <array>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "plcat/bitset.hpp"
#include "plcat/errors.hpp"

namespace plcat {

using VertexId = int;
using EdgeId = int;
using TriangleId = int;

// Reference to a simplex of some complex: dim 0/1/2 plus the table index.
struct SimplexRef {
    int dim = -1;
    int id = -1;
    bool operator==(const SimplexRef& o) const { return dim == o.dim && id == o.id; }
    bool operator<(const SimplexRef& o) const {
        return dim != o.dim ? dim < o.dim : id < o.id;
    }
};

// Abstract simplicial complex of dimension <= 2. Vertices carry string
// labels; edges and triangles are stored as id tuples sorted ascending, the
// tables themselves sorted lexicographically. Values are immutable once
// built: every transformation returns a new complex.
struct Complex2 {
    std::vector<std::string> labels;                 // vertex id -> label
    std::vector<std::array<VertexId, 2>> edges;      // sorted pairs, table lex-sorted
    std::vector<std::array<VertexId, 3>> triangles;  // sorted triples, table lex-sorted

    std::vector<std::vector<EdgeId>> vertex_edges;
    std::vector<std::vector<TriangleId>> vertex_triangles;
    std::vector<std::vector<TriangleId>> edge_triangles;

    std::unordered_map<std::string, VertexId> vertex_index;
    std::map<std::array<VertexId, 2>, EdgeId> edge_index;
    std::map<std::array<VertexId, 3>, TriangleId> triangle_index;

    std::size_t vertex_count() const { return labels.size(); }
    std::size_t edge_count() const { return edges.size(); }
    std::size_t triangle_count() const { return triangles.size(); }
    std::size_t simplex_count() const { return labels.size() + edges.size() + triangles.size(); }

    VertexId vertex_id(const std::string& label) const;       // -1 when absent
    EdgeId edge_id(VertexId a, VertexId b) const;             // -1 when absent
    TriangleId triangle_id(VertexId a, VertexId b, VertexId c) const;

    // -1 for the empty complex, else max simplex dimension.
    int dimension() const;

    std::vector<std::string> face_labels(const SimplexRef& s) const;

    // Maximal faces in canonical order (sorted id tuples, dimension mixed,
    // ordered lexicographically by id tuple). Rebuilding from this list gives
    // back the same labeled complex.
    std::vector<std::vector<std::string>> maximal_faces() const;

    bool is_connected() const;
    int component_count() const;

    // Label-level equality (same labeled simplices, internal ids may differ).
    bool operator==(const Complex2& o) const;

    // Canonical serialization of the labeled simplices; content_hash is an
    // FNV-1a of it, stable across internal id permutations.
    std::string canonical_text() const;
    std::string content_hash() const;
};

// Builds the downward closure of the given faces (tuples of 1-3 distinct
// labels). Vertex ids are assigned in first-seen order.
Complex2 from_maximal_faces(const std::vector<std::vector<std::string>>& faces);

// Subset of a complex, one bit-vector per dimension.
struct SubcomplexMask {
    Bitset vertices, edges, triangles;

    bool operator==(const SubcomplexMask& o) const {
        return vertices == o.vertices && edges == o.edges && triangles == o.triangles;
    }
    bool operator!=(const SubcomplexMask& o) const { return !(*this == o); }
    std::size_t simplex_count() const {
        return vertices.count() + edges.count() + triangles.count();
    }
    bool contains(const SimplexRef& s) const {
        switch (s.dim) {
            case 0: return vertices.test(s.id);
            case 1: return edges.test(s.id);
            default: return triangles.test(s.id);
        }
    }
    bool is_subset_of(const SubcomplexMask& o) const {
        return vertices.is_subset_of(o.vertices) && edges.is_subset_of(o.edges) &&
               triangles.is_subset_of(o.triangles);
    }
};

SubcomplexMask empty_mask(const Complex2& k);
SubcomplexMask full_mask(const Complex2& k);
SubcomplexMask mask_union(const SubcomplexMask& a, const SubcomplexMask& b);
SubcomplexMask mask_intersection(const SubcomplexMask& a, const SubcomplexMask& b);
SubcomplexMask mask_difference(const SubcomplexMask& a, const SubcomplexMask& b);

// Downward closure (inside k) of the simplices already set in m.
SubcomplexMask mask_closure(const Complex2& k, SubcomplexMask m);
// Closure of the given faces, resolved by labels. Throws InvalidSimplexError
// on faces not present in k.
SubcomplexMask mask_from_faces(const Complex2& k, const std::vector<std::vector<std::string>>& faces);
// True iff the masked simplex set is downward closed.
bool is_valid_subcomplex(const Complex2& k, const SubcomplexMask& m);
// Maximal faces of the masked subcomplex, canonical order.
std::vector<std::vector<std::string>> mask_maximal_faces(const Complex2& k, const SubcomplexMask& m);

// Standalone complex built from a mask, with child->parent id maps.
struct Subcomplex {
    Complex2 complex;
    std::vector<VertexId> vertex_to_parent;
    std::vector<EdgeId> edge_to_parent;
    std::vector<TriangleId> triangle_to_parent;

    // Translate a parent-space mask (clipped to this subcomplex) into child space.
    SubcomplexMask to_child(const SubcomplexMask& parent_mask) const;
    SubcomplexMask to_parent(const Complex2& parent, const SubcomplexMask& child_mask) const;
};

Subcomplex restrict_to(const Complex2& k, const SubcomplexMask& m);

// Link of a vertex: nodes are the edge-neighbors of v, arcs come from
// triangles through v. Neighbors joined to v only by an edge stay isolated.
struct LinkGraph {
    std::vector<VertexId> nodes;
    std::vector<std::array<VertexId, 2>> arcs;
    bool connected() const;  // vacuously true when empty
};

LinkGraph link_graph(const Complex2& k, VertexId v);

// Graph on triangles; one arc per unordered pair sharing an edge.
struct DualGraph {
    std::size_t node_count = 0;
    std::vector<std::array<TriangleId, 2>> arcs;
    bool connected() const;
};

DualGraph dual_graph(const Complex2& k);

bool is_pure(const Complex2& k);          // throws EmptyComplexError
int reduced_euler(const Complex2& k);     // -1 + V - E + F; throws EmptyComplexError

}  // namespace plcat

#endif
