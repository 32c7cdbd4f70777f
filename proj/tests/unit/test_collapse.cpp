#include <doctest.h>

#include "plcat/collapse.hpp"
#include "plcat/homology.hpp"
#include "plcat/subdivision.hpp"
#include "support/fixtures.hpp"
#include "support/gen.hpp"

using namespace plcat;

TEST_CASE("free faces of basic complexes") {
    Complex2 tri = fixtures::single_triangle();
    auto steps = free_faces(tri, empty_mask(tri));
    CHECK(steps.size() == 3);
    for (const auto& s : steps) CHECK(s.free_dim == 1);

    Complex2 sphere = fixtures::boundary_tetrahedron();
    CHECK(free_faces(sphere, empty_mask(sphere)).empty());

    // lone edge: both endpoints are free vertices
    Complex2 edge = from_maximal_faces({{"a", "b"}});
    auto esteps = free_faces(edge, empty_mask(edge));
    CHECK(esteps.size() == 2);
    CHECK(esteps[0].free_dim == 0);
}

TEST_CASE("free faces respect protection") {
    auto base = std::make_shared<Complex2>(fixtures::single_triangle());
    SubdivisionMap m = barycentric(base);
    // protect the subdivision of edges ab and bc
    SubcomplexMask l = empty_mask(*base);
    l.edges.set(base->edge_id(base->vertex_id("a"), base->vertex_id("b")));
    l.edges.set(base->edge_id(base->vertex_id("b"), base->vertex_id("c")));
    l = mask_closure(*base, l);
    SubcomplexMask protect = corresponding_subcomplex(m, l);
    for (const auto& s : free_faces(*m.child, protect)) {
        CHECK(!protect.contains({s.free_dim, s.free_id}));
    }
}

TEST_CASE("greedy collapse on basic complexes") {
    Complex2 tri = fixtures::single_triangle();
    GreedyResult g = greedy_collapse(tri, empty_mask(tri));
    CHECK(g.residual.vertices.count() == 1);
    CHECK(g.residual.edges.none());
    CHECK(g.residual.triangles.none());
    CHECK(replay_certificate(tri, g.certificate));

    Complex2 sphere = fixtures::boundary_tetrahedron();
    GreedyResult gs = greedy_collapse(sphere, empty_mask(sphere));
    CHECK(gs.certificate.steps.empty());
    CHECK(gs.residual == full_mask(sphere));
}

TEST_CASE("greedy collapse onto a protected subdivided path") {
    gen::Rng rng(5);
    for (int i = 0; i < 25; ++i) {
        SubdivisionMap m = gen::random_triangle_subdivision(rng);
        const Complex2& base = *m.parent;
        SubcomplexMask l = empty_mask(base);
        l.edges.set(base.edge_id(base.vertex_id("a"), base.vertex_id("b")));
        l.edges.set(base.edge_id(base.vertex_id("b"), base.vertex_id("c")));
        l = mask_closure(base, l);
        SubcomplexMask protect = corresponding_subcomplex(m, l);
        GreedyResult g = greedy_collapse(*m.child, protect);
        CHECK(g.residual == protect);
    }
}

TEST_CASE("is_collapsible on the named examples") {
    CHECK(is_collapsible(fixtures::two_triangles_shared_vertex()).has_value());
    CHECK(!is_collapsible(fixtures::boundary_tetrahedron()).has_value());
    CHECK_THROWS_AS(is_collapsible(from_maximal_faces({{"a", "b"}, {"c", "d"}})),
                    NotConnectedError);
}

TEST_CASE("the dunce hat is contractible but not collapsible") {
    Complex2 dh = fixtures::dunce_hat();
    CHECK(dh.vertex_count() == 13);
    CHECK(dh.edge_count() == 39);
    CHECK(dh.triangle_count() == 27);
    CHECK(betti(dh) == Betti{1, 0, 0});        // Z2-acyclic, as a contractible space must be
    CHECK(free_faces(dh, empty_mask(dh)).empty());  // stuck immediately
    CHECK(!is_collapsible(dh).has_value());
}

TEST_CASE("collapses_to") {
    Complex2 tri = fixtures::single_triangle();
    SubcomplexMask edge = empty_mask(tri);
    edge.edges.set(0);
    edge = mask_closure(tri, edge);
    CHECK(collapses_to(tri, edge).has_value());

    Complex2 sphere = fixtures::boundary_tetrahedron();
    SubcomplexMask point = empty_mask(sphere);
    point.vertices.set(0);
    CHECK(!collapses_to(sphere, point).has_value());
}

TEST_CASE("brute force oracle on the named examples") {
    Complex2 tri = fixtures::single_triangle();
    CHECK(brute_force_collapsible(tri));
    CHECK(!brute_force_collapsible(fixtures::boundary_tetrahedron()));
    Complex2 big = fixtures::dunce_hat();
    CHECK_THROWS_AS(brute_force_collapsible(big), TooLargeError);
}

TEST_CASE("greedy agrees with the exhaustive oracle") {
    gen::Rng rng(6);
    for (int i = 0; i < 120; ++i) {
        Complex2 k = gen::random_connected_complex(rng, 6);
        CHECK(is_collapsible(k).has_value() == brute_force_collapsible(k));
    }
}

TEST_CASE("collapses_to agrees with the exhaustive oracle on random targets") {
    gen::Rng rng(7);
    int agreements = 0;
    for (int i = 0; i < 60; ++i) {
        Complex2 k = gen::random_connected_complex(rng, 5);
        GreedyResult g = greedy_collapse(k, empty_mask(k));
        // the greedy residual is certainly reachable; the oracle must agree
        CHECK(brute_force_collapses_to(k, g.residual));
        ++agreements;
    }
    CHECK(agreements == 60);
}

TEST_CASE("certificate bookkeeping") {
    gen::Rng rng(8);
    for (int i = 0; i < 60; ++i) {
        Complex2 k = gen::random_connected_complex(rng, 8);
        GreedyResult g = greedy_collapse(k, empty_mask(k));
        CHECK(replay_certificate(k, g.certificate, &g.residual));
        CHECK(g.residual.simplex_count() ==
              k.simplex_count() - 2 * g.certificate.steps.size());
        // tampering is caught
        if (!g.certificate.steps.empty()) {
            CollapseCertificate bad = g.certificate;
            bad.steps.erase(bad.steps.begin());
            CHECK(!replay_certificate(k, bad));
        }
    }
}

TEST_CASE("collapsibility implies trivial GF(2) homology") {
    gen::Rng rng(9);
    for (int i = 0; i < 80; ++i) {
        Complex2 k = gen::random_connected_complex(rng, 8);
        if (is_collapsible(k)) {
            CHECK(reduced_euler(k) == 0);
            CHECK(betti(k) == Betti{1, 0, 0});
        }
    }
}
