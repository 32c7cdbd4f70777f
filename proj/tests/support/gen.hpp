#ifndef PLCAT_TESTS_GEN_HPP
#define PLCAT_TESTS_GEN_HPP

#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "plcat/complex.hpp"
#include "plcat/sat.hpp"
#include "plcat/subdivision.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline int pick(Rng& rng, int n) { return static_cast<int>(rng() % static_cast<unsigned>(n)); }

// Random connected downward-closed 2-complex: grows triangle by triangle,
// each new face sharing at least one vertex with the current complex;
// occasionally hangs a dangling edge on it.
inline plcat::Complex2 random_connected_complex(Rng& rng, int max_triangles,
                                                bool allow_impure = true) {
    int target = 1 + pick(rng, max_triangles);
    int max_vertices = 4 + max_triangles;
    std::vector<std::string> labels;
    for (int i = 0; i < max_vertices; ++i) labels.push_back("v" + std::to_string(i));

    // every face anchors on a vertex that is already part of the complex
    std::vector<int> placed{0, 1, 2};
    int next_fresh = 3;
    std::set<std::array<int, 3>> tris;
    tris.insert({0, 1, 2});

    auto pick_vertex = [&](int already_fresh) -> int {
        if (next_fresh + already_fresh < max_vertices && pick(rng, 3) == 0)
            return next_fresh + already_fresh;
        return placed[pick(rng, static_cast<int>(placed.size()))];
    };

    int attempts = 0;
    while (static_cast<int>(tris.size()) < target && attempts++ < 200) {
        int a = placed[pick(rng, static_cast<int>(placed.size()))];
        int b = pick_vertex(0);
        int c = pick_vertex(b == next_fresh ? 1 : 0);
        std::array<int, 3> t{a, b, c};
        std::sort(t.begin(), t.end());
        if (t[0] == t[1] || t[1] == t[2]) continue;
        if (!tris.insert(t).second) continue;
        for (int v : {b, c})
            if (v >= next_fresh) {
                placed.push_back(v);
                next_fresh = v + 1;
            }
    }

    std::vector<std::vector<std::string>> faces;
    for (const auto& t : tris) faces.push_back({labels[t[0]], labels[t[1]], labels[t[2]]});
    if (allow_impure && pick(rng, 3) == 0) {
        int a = placed[pick(rng, static_cast<int>(placed.size()))];
        int b = next_fresh < max_vertices
                    ? next_fresh
                    : placed[pick(rng, static_cast<int>(placed.size()))];
        if (a != b) faces.push_back({labels[a], labels[b]});
    }
    return plcat::from_maximal_faces(faces);
}

// Random subdivision of the single triangle abc: a short composition of
// barycentric and seven-part steps, capped so children stay desk-sized.
inline plcat::SubdivisionMap random_triangle_subdivision(Rng& rng, int max_ops = 3) {
    auto base = std::make_shared<plcat::Complex2>(
        plcat::from_maximal_faces({{"a", "b", "c"}}));
    plcat::SubdivisionMap total = plcat::identity_subdivision(base);
    int ops = 1 + pick(rng, max_ops);
    for (int i = 0; i < ops; ++i) {
        if (total.child->triangle_count() > 80) break;
        if (pick(rng, 2) == 0) {
            total = plcat::compose(total, plcat::barycentric(total.child));
        } else {
            int t = pick(rng, static_cast<int>(total.child->triangle_count()));
            total = plcat::compose(total, plcat::seven_part(total.child, t).map);
        }
    }
    return total;
}

// Random 3-CNF with clauses over three distinct variables (so parsing and
// normalization never rewrite them).
inline plcat::Formula random_formula(Rng& rng, int max_vars) {
    plcat::Formula f;
    f.num_vars = 3 + pick(rng, std::max(1, max_vars - 2));
    int clauses = 1 + pick(rng, 3 * f.num_vars);
    for (int i = 0; i < clauses; ++i) {
        std::set<int> vars;
        while (static_cast<int>(vars.size()) < 3) vars.insert(1 + pick(rng, f.num_vars));
        std::array<int, 3> cl;
        int j = 0;
        for (int v : vars) cl[j++] = pick(rng, 2) ? v : -v;
        f.clauses.push_back(cl);
    }
    return f;
}

}  // namespace gen

#endif
