#ifndef PLCAT_TESTS_ORACLES_HPP
#define PLCAT_TESTS_ORACLES_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "plcat/complex.hpp"
#include "plcat/sat.hpp"
#include "plcat/subdivision.hpp"

namespace oracles {

// Full truth table by recursive assignment construction; kept independent of
// the library's integer-sweep implementation. Variable 1 toggles fastest, so
// `first` matches the library's numeric enumeration order.
struct TruthTable {
    bool satisfiable = false;
    std::vector<bool> first;
    std::uint64_t count = 0;
};

inline TruthTable truth_table_sat(const plcat::Formula& f) {
    TruthTable r;
    std::vector<bool> a(f.num_vars, false);
    std::function<void(int)> rec = [&](int i) {
        if (i < 0) {
            bool ok = true;
            for (const auto& cl : f.clauses) {
                bool cs = false;
                for (int lit : cl) cs = cs || (lit > 0 ? a[lit - 1] : !a[-lit - 1]);
                if (!cs) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                ++r.count;
                if (!r.satisfiable) {
                    r.satisfiable = true;
                    r.first = a;
                }
            }
            return;
        }
        a[i] = false;
        rec(i - 1);
        a[i] = true;
        rec(i - 1);
        a[i] = false;
    };
    rec(f.num_vars - 1);
    return r;
}

// Recomputes the carrier of a child simplex from its vertices' carriers: the
// parent simplex whose vertex set is the union of the carrier vertex sets.
inline plcat::SimplexRef recompute_carrier(const plcat::SubdivisionMap& m, int dim, int id) {
    const plcat::Complex2& child = *m.child;
    const plcat::Complex2& parent = *m.parent;
    std::vector<int> child_vertices;
    if (dim == 0)
        child_vertices = {id};
    else if (dim == 1)
        child_vertices = {child.edges[id][0], child.edges[id][1]};
    else
        child_vertices = {child.triangles[id][0], child.triangles[id][1],
                          child.triangles[id][2]};
    std::set<int> u;
    for (int v : child_vertices) {
        plcat::SimplexRef c = m.vertex_carrier[v];
        if (c.dim == 0) u.insert(c.id);
        if (c.dim == 1) u.insert({parent.edges[c.id][0], parent.edges[c.id][1]});
        if (c.dim == 2)
            u.insert({parent.triangles[c.id][0], parent.triangles[c.id][1],
                      parent.triangles[c.id][2]});
    }
    std::vector<int> verts(u.begin(), u.end());
    if (verts.size() == 1) return {0, verts[0]};
    if (verts.size() == 2) return {1, parent.edge_id(verts[0], verts[1])};
    if (verts.size() == 3) return {2, parent.triangle_id(verts[0], verts[1], verts[2])};
    return {-1, -1};
}

// Betti numbers by naive rank computation over explicit incidence tables
// (integer Gaussian elimination mod 2 on bool matrices) — a deliberately
// different code path from the bitset kernels.
inline std::array<int, 3> naive_betti(const plcat::Complex2& k) {
    auto rank_of = [](std::vector<std::vector<bool>> m) -> int {
        int rank = 0;
        std::size_t rows = m.size();
        if (rows == 0) return 0;
        std::size_t cols = m[0].size();
        for (std::size_t c = 0; c < cols; ++c) {
            std::size_t pivot = rows;
            for (std::size_t r = rank; r < rows; ++r)
                if (m[r][c]) {
                    pivot = r;
                    break;
                }
            if (pivot == rows) continue;
            std::swap(m[rank], m[pivot]);
            for (std::size_t r = 0; r < rows; ++r)
                if (r != static_cast<std::size_t>(rank) && m[r][c])
                    for (std::size_t cc = 0; cc < cols; ++cc)
                        m[r][cc] = m[r][cc] != m[rank][cc];
            ++rank;
        }
        return rank;
    };

    std::size_t v = k.vertex_count(), e = k.edge_count(), f = k.triangle_count();
    std::vector<std::vector<bool>> d1(v, std::vector<bool>(e, false));
    for (std::size_t i = 0; i < e; ++i) {
        d1[k.edges[i][0]][i] = true;
        d1[k.edges[i][1]][i] = true;
    }
    std::vector<std::vector<bool>> d2(e, std::vector<bool>(f, false));
    for (std::size_t i = 0; i < f; ++i) {
        const auto& t = k.triangles[i];
        for (int j = 0; j < 3; ++j) d2[k.edge_id(t[j], t[(j + 1) % 3])][i] = true;
    }
    int r1 = e ? rank_of(d1) : 0;
    int r2 = f ? rank_of(d2) : 0;
    return {static_cast<int>(v) - r1, static_cast<int>(e) - r1 - r2,
            static_cast<int>(f) - r2};
}

}  // namespace oracles

#endif
