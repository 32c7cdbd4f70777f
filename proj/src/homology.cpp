#include "plcat/homology.hpp"

#include <cassert>

namespace plcat {

Chain chain_from_mask_edges(const SubcomplexMask& m) { return Chain{1, m.edges}; }

gf2::Matrix boundary_matrix(const Complex2& k, int dim) {
    if (dim == 1) {
        gf2::Matrix m(k.vertex_count(), k.edge_count());
        for (std::size_t e = 0; e < k.edge_count(); ++e) {
            m.rows[k.edges[e][0]].set(e);
            m.rows[k.edges[e][1]].set(e);
        }
        return m;
    }
    if (dim == 2) {
        gf2::Matrix m(k.edge_count(), k.triangle_count());
        for (std::size_t t = 0; t < k.triangle_count(); ++t) {
            const auto& tri = k.triangles[t];
            for (int i = 0; i < 3; ++i) m.rows[k.edge_id(tri[i], tri[(i + 1) % 3])].set(t);
        }
        return m;
    }
    throw DimensionMismatchError("boundary matrix defined for dim 1 and 2");
}

Chain boundary(const Complex2& k, const Chain& c) {
    if (c.dim == 1) {
        if (c.bits.size() != k.edge_count())
            throw DimensionMismatchError("chain does not match edge table");
        Chain out{0, Bitset(k.vertex_count())};
        for (int e : c.bits.ones()) {
            out.bits.flip(k.edges[e][0]);
            out.bits.flip(k.edges[e][1]);
        }
        return out;
    }
    if (c.dim == 2) {
        if (c.bits.size() != k.triangle_count())
            throw DimensionMismatchError("chain does not match triangle table");
        Chain out{1, Bitset(k.edge_count())};
        for (int t : c.bits.ones()) {
            const auto& tri = k.triangles[t];
            for (int i = 0; i < 3; ++i) out.bits.flip(k.edge_id(tri[i], tri[(i + 1) % 3]));
        }
        return out;
    }
    throw DimensionMismatchError("boundary defined for chains of dim 1 and 2");
}

Betti betti(const Complex2& k) {
    std::size_t v = k.vertex_count(), e = k.edge_count(), f = k.triangle_count();
    if (v == 0) return {0, 0, 0};
    std::size_t r1 = e ? gf2::rank(boundary_matrix(k, 1)) : 0;
    std::size_t r2 = f ? gf2::rank(boundary_matrix(k, 2)) : 0;
    Betti b;
    b.b0 = static_cast<int>(v - r1);
    b.b1 = static_cast<int>((e - r1) - r2);
    b.b2 = static_cast<int>(f - r2);
    return b;
}

NullhomologyResult is_nullhomologous(const Complex2& k, const Chain& z) {
    if (z.dim != 1) throw DimensionMismatchError("nullhomology test takes a 1-chain");
    if (z.bits.size() != k.edge_count())
        throw DimensionMismatchError("chain does not match edge table");
    if (boundary(k, z).bits.any()) throw NotACycleError("chain has nonzero boundary");

    NullhomologyResult res;
    if (z.bits.none()) {
        res.nullhomologous = true;
        res.filling = Chain{2, Bitset(k.triangle_count())};
        return res;
    }
    auto x = gf2::solve(boundary_matrix(k, 2), z.bits);
    if (!x) return res;
    res.nullhomologous = true;
    res.filling = Chain{2, *x};
    return res;
}

bool h2_supported_only_on(const Complex2& k, const std::vector<SubcomplexMask>& spheres) {
    for (std::size_t i = 0; i < spheres.size(); ++i)
        for (std::size_t j = i + 1; j < spheres.size(); ++j)
            if (spheres[i].vertices.intersects(spheres[j].vertices) ||
                spheres[i].edges.intersects(spheres[j].edges) ||
                spheres[i].triangles.intersects(spheres[j].triangles))
                throw SpheresNotDisjointError("subcomplexes overlap");

    std::vector<Bitset> kernel =
        k.triangle_count() ? gf2::kernel_basis(boundary_matrix(k, 2)) : std::vector<Bitset>{};
    if (kernel.size() != spheres.size()) return false;

    Bitset covered(k.triangle_count());
    for (const auto& s : spheres) {
        // Each fundamental class must itself be a nonzero 2-cycle.
        Chain fc{2, s.triangles};
        if (fc.bits.none()) return false;
        if (boundary(k, fc).bits.any()) return false;
        covered |= s.triangles;
    }
    for (const auto& v : kernel)
        if (!v.is_subset_of(covered)) return false;
    return true;
}

}  // namespace plcat
