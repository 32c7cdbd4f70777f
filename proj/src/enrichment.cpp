#include "plcat/enrichment.hpp"

#include <algorithm>
#include <set>

#include "plcat/homology.hpp"

namespace plcat {

namespace {

// Triangles of the grid torus as label triples; grid[i][j] with i,j mod 3.
std::vector<std::vector<std::string>> torus_triangles(
    const std::array<std::array<std::string, 3>, 3>& grid) {
    std::vector<std::vector<std::string>> faces;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int i1 = (i + 1) % 3, j1 = (j + 1) % 3;
            faces.push_back({grid[i][j], grid[i][j1], grid[i1][j1]});
            faces.push_back({grid[i][j], grid[i1][j], grid[i1][j1]});
        }
    return faces;
}

// Rows {0,1} band triangles (the 6 torus triangles with i = 0).
std::vector<std::vector<std::string>> band_triangles(
    const std::array<std::array<std::string, 3>, 3>& grid, int row) {
    std::vector<std::vector<std::string>> faces;
    int i = row, i1 = (row + 1) % 3;
    for (int j = 0; j < 3; ++j) {
        int j1 = (j + 1) % 3;
        faces.push_back({grid[i][j], grid[i][j1], grid[i1][j1]});
        faces.push_back({grid[i][j], grid[i1][j], grid[i1][j1]});
    }
    return faces;
}

std::vector<std::vector<std::string>> longitude_faces(
    const std::array<std::string, 3>& row0) {
    return {{row0[0], row0[1]}, {row0[1], row0[2]}, {row0[2], row0[0]}};
}

}  // namespace

TorusBlock torus_block(const std::array<std::string, 3>& longitude_labels,
                       const std::array<std::string, 6>& interior_labels) {
    std::set<std::string> all(longitude_labels.begin(), longitude_labels.end());
    all.insert(interior_labels.begin(), interior_labels.end());
    if (all.size() != 9) throw LabelCollisionError("torus needs 9 distinct labels");

    std::array<std::array<std::string, 3>, 3> grid;
    for (int j = 0; j < 3; ++j) {
        grid[0][j] = longitude_labels[j];
        grid[1][j] = interior_labels[j];
        grid[2][j] = interior_labels[3 + j];
    }

    TorusBlock tb;
    tb.complex = from_maximal_faces(torus_triangles(grid));
    tb.longitude = mask_from_faces(tb.complex, longitude_faces(longitude_labels));
    tb.annulus1 = mask_from_faces(tb.complex, band_triangles(grid, 0));
    auto a2 = band_triangles(grid, 1);
    auto a2b = band_triangles(grid, 2);
    a2.insert(a2.end(), a2b.begin(), a2b.end());
    tb.annulus2 = mask_from_faces(tb.complex, a2);
    return tb;
}

ComplexPlus enrich(const Complex2& k) {
    std::vector<std::vector<std::string>> faces = k.maximal_faces();
    std::vector<std::array<std::array<std::string, 3>, 3>> grids(k.triangle_count());
    for (std::size_t t = 0; t < k.triangle_count(); ++t) {
        const auto& tri = k.triangles[t];
        auto& grid = grids[t];
        for (int j = 0; j < 3; ++j) grid[0][j] = k.labels[tri[j]];
        for (int i = 1; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                grid[i][j] = "t" + std::to_string(t) + "_r" + std::to_string(i) + "c" +
                             std::to_string(j);
                if (k.vertex_index.count(grid[i][j]))
                    throw LabelCollisionError("fresh torus label already used: " + grid[i][j]);
            }
        auto tf = torus_triangles(grid);
        faces.insert(faces.end(), tf.begin(), tf.end());
    }

    ComplexPlus kp;
    kp.complex = std::make_shared<Complex2>(from_maximal_faces(faces));
    const Complex2& plus = *kp.complex;

    kp.base = mask_from_faces(plus, k.maximal_faces());
    for (std::size_t t = 0; t < k.triangle_count(); ++t) {
        const auto& grid = grids[t];
        TorusHandles h;
        const auto& tri = k.triangles[t];
        h.base_triangle = plus.triangle_id(plus.vertex_id(k.labels[tri[0]]),
                                           plus.vertex_id(k.labels[tri[1]]),
                                           plus.vertex_id(k.labels[tri[2]]));
        h.torus = mask_from_faces(plus, torus_triangles(grid));
        h.longitude = mask_from_faces(plus, longitude_faces(grid[0]));
        h.annulus1 = mask_from_faces(plus, band_triangles(grid, 0));
        auto a2 = band_triangles(grid, 1);
        auto a2b = band_triangles(grid, 2);
        a2.insert(a2.end(), a2b.begin(), a2b.end());
        h.annulus2 = mask_from_faces(plus, a2);
        kp.tori.push_back(std::move(h));
    }
    return kp;
}

namespace {

void check(bool cond, const std::string& what) {
    if (!cond) throw Error("enriched complex invariant failed: " + what);
}

}  // namespace

void validate_complex_plus(const ComplexPlus& kp) {
    const Complex2& plus = *kp.complex;
    check(is_valid_subcomplex(plus, kp.base), "base mask is a subcomplex");
    SubcomplexMask covered = kp.base;
    for (const auto& h : kp.tori) {
        check(h.base_triangle >= 0 && kp.base.triangles.test(h.base_triangle),
              "base triangle present");
        // torus meets the base exactly in the longitude = triangle boundary
        SubcomplexMask meet = mask_intersection(h.torus, kp.base);
        check(meet == h.longitude, "torus ∩ base = longitude");
        const auto& tri = plus.triangles[h.base_triangle];
        SubcomplexMask boundary = empty_mask(plus);
        for (int i = 0; i < 3; ++i) {
            boundary.vertices.set(tri[i]);
            boundary.edges.set(plus.edge_id(tri[i], tri[(i + 1) % 3]));
        }
        check(boundary == h.longitude, "longitude = triangle boundary");
        check(h.torus.vertices.count() == 9 && h.torus.edges.count() == 27 &&
                  h.torus.triangles.count() == 18,
              "torus size");

        Subcomplex torus = restrict_to(plus, h.torus);
        check(betti(torus.complex) == Betti{1, 2, 1}, "torus betti (1,2,1)");
        Chain lambda = chain_from_mask_edges(torus.to_child(h.longitude));
        check(!is_nullhomologous(torus.complex, lambda).nullhomologous,
              "longitude not nullhomologous in its torus");
        check(mask_union(h.annulus1, h.annulus2) == h.torus, "annuli cover the torus");
        for (const SubcomplexMask& a : {h.annulus1, h.annulus2}) {
            Subcomplex annulus = restrict_to(plus, a);
            check(collapses_to(annulus.complex, annulus.to_child(h.longitude)).has_value(),
                  "annulus collapses to the longitude");
        }
        covered = mask_union(covered, h.torus);
    }
    check(covered == full_mask(plus), "base and tori cover the enriched complex");
}

std::pair<SubcomplexMask, SubcomplexMask> cover_from_pair(const ComplexPlus& kp,
                                                          const SubcomplexMask& k1,
                                                          const SubcomplexMask& k2) {
    const Complex2& plus = *kp.complex;
    if (!is_valid_subcomplex(plus, k1) || !is_valid_subcomplex(plus, k2))
        throw PreconditionViolationError("subcomplex", "k1/k2 must be subcomplexes");
    if (!k1.is_subset_of(kp.base) || !k2.is_subset_of(kp.base))
        throw PreconditionViolationError("subcomplex", "k1/k2 must lie in the base");
    if (mask_union(k1, k2) != kp.base)
        throw PreconditionViolationError("cover", "k1 ∪ k2 must equal the base");
    for (const SubcomplexMask& ki : {k1, k2}) {
        if (!kp.base.vertices.is_subset_of(ki.vertices) ||
            !kp.base.edges.is_subset_of(ki.edges))
            throw PreconditionViolationError("1-skeleton",
                                             "each piece must contain the base 1-skeleton");
    }
    for (const SubcomplexMask& ki : {k1, k2}) {
        Subcomplex piece = restrict_to(plus, ki);
        if (!piece.complex.is_connected() || !is_collapsible(piece.complex))
            throw PreconditionViolationError("collapsible", "base piece must be collapsible");
    }

    SubcomplexMask p1 = k1, p2 = k2;
    for (const auto& h : kp.tori) {
        p1 = mask_union(p1, h.annulus1);
        p2 = mask_union(p2, h.annulus2);
    }
    // construction guarantees: each piece collapses torus-by-torus onto its
    // base part, so plain greedy must confirm collapsibility
    for (const SubcomplexMask& p : {p1, p2}) {
        Subcomplex piece = restrict_to(plus, p);
        if (!is_collapsible(piece.complex))
            throw Error("internal: enriched cover piece failed to collapse");
    }
    if (mask_union(p1, p2) != full_mask(plus))
        throw Error("internal: enriched pieces do not cover");
    return {p1, p2};
}

bool torus_obstruction(const ComplexPlus& kp, const SubcomplexMask& q1, const SubcomplexMask& q2,
                       std::size_t torus_index) {
    const Complex2& plus = *kp.complex;
    if (mask_union(q1, q2) != full_mask(plus))
        throw NotACoverError("q1 ∪ q2 must cover the enriched complex");
    const TorusHandles& h = kp.tori.at(torus_index);

    if (!h.longitude.is_subset_of(q1) || !h.longitude.is_subset_of(q2)) return false;

    // R = everything except the open torus interior.
    SubcomplexMask interior = mask_difference(h.torus, h.longitude);
    SubcomplexMask r = mask_difference(full_mask(plus), interior);
    for (const SubcomplexMask* q : {&q1, &q2}) {
        SubcomplexMask m = mask_intersection(r, *q);
        Subcomplex sub = restrict_to(plus, m);
        Chain lambda = chain_from_mask_edges(sub.to_child(h.longitude));
        if (lambda.bits.count() != 3) return false;
        if (!is_nullhomologous(sub.complex, lambda).nullhomologous) return false;
    }
    return true;
}

}  // namespace plcat
