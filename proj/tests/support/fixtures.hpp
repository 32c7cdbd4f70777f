#ifndef PLCAT_TESTS_FIXTURES_HPP
#define PLCAT_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include "plcat/complex.hpp"

namespace fixtures {

inline plcat::Complex2 single_triangle() {
    return plcat::from_maximal_faces({{"a", "b", "c"}});
}

inline plcat::Complex2 boundary_tetrahedron() {
    return plcat::from_maximal_faces(
        {{"a", "b", "c"}, {"a", "b", "d"}, {"a", "c", "d"}, {"b", "c", "d"}});
}

inline plcat::Complex2 two_triangles_shared_vertex() {
    return plcat::from_maximal_faces({{"a", "b", "c"}, {"c", "d", "e"}});
}

inline plcat::Complex2 two_triangles_shared_edge() {
    return plcat::from_maximal_faces({{"a", "b", "c"}, {"b", "c", "d"}});
}

// Dunce hat built from the identification square a·a·a⁻¹: the 9-gon boundary
// of a subdivided triangle maps onto the 3-cycle X-P-Q, an inner 9-cycle
// u0..u8 and a center z triangulate the disk. Every boundary edge class has
// exactly three preimages, every other simplex embeds, so the quotient is a
// genuine dunce-hat triangulation: 13 vertices, 39 edges, 27 triangles,
// contractible, and without any free face.
inline plcat::Complex2 dunce_hat() {
    const std::vector<std::string> ring{"X", "P", "Q", "X", "P", "Q", "X", "Q", "P"};
    std::vector<std::vector<std::string>> faces;
    for (int i = 0; i < 9; ++i) {
        std::string ui = "u" + std::to_string(i);
        std::string un = "u" + std::to_string((i + 1) % 9);
        faces.push_back({ring[i], ring[(i + 1) % 9], ui});
        faces.push_back({ring[(i + 1) % 9], ui, un});
        faces.push_back({ui, un, "z"});
    }
    return plcat::from_maximal_faces(faces);
}

}  // namespace fixtures

#endif
