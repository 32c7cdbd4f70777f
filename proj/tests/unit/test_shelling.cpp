#include <doctest.h>

#include <algorithm>

#include "plcat/collapse.hpp"
#include "plcat/homology.hpp"
#include "plcat/shelling.hpp"
#include "plcat/subdivision.hpp"
#include "support/fixtures.hpp"
#include "support/gen.hpp"

using namespace plcat;

TEST_CASE("verify_shelling on pairs of triangles") {
    Complex2 edge_pair = fixtures::two_triangles_shared_edge();
    CHECK(verify_shelling(edge_pair, {0, 1}).valid);
    CHECK(verify_shelling(edge_pair, {1, 0}).valid);

    Complex2 vertex_pair = fixtures::two_triangles_shared_vertex();
    ShellingCheck c = verify_shelling(vertex_pair, {0, 1});
    CHECK(!c.valid);
    CHECK(c.violating_index == 1);
    CHECK(!verify_shelling(vertex_pair, {1, 0}).valid);
}

TEST_CASE("every order shells the boundary tetrahedron") {
    Complex2 sphere = fixtures::boundary_tetrahedron();
    std::vector<TriangleId> order{0, 1, 2, 3};
    int count = 0;
    do {
        CHECK(verify_shelling(sphere, order).valid);
        ++count;
    } while (std::next_permutation(order.begin(), order.end()));
    CHECK(count == 24);
}

TEST_CASE("verify_shelling validates its inputs") {
    Complex2 impure = from_maximal_faces({{"a", "b", "c"}, {"c", "d"}});
    CHECK_THROWS_AS(verify_shelling(impure, {0}), NotPureError);
    Complex2 sphere = fixtures::boundary_tetrahedron();
    CHECK_THROWS_AS(verify_shelling(sphere, {0, 1, 2}), NotAPermutationError);
    CHECK_THROWS_AS(verify_shelling(sphere, {0, 1, 2, 2}), NotAPermutationError);
}

TEST_CASE("find_shelling") {
    Complex2 sphere = fixtures::boundary_tetrahedron();
    auto order = find_shelling(sphere);
    REQUIRE(order.has_value());
    CHECK(verify_shelling(sphere, *order).valid);

    CHECK(!find_shelling(fixtures::two_triangles_shared_vertex()).has_value());

    Complex2 tri = fixtures::single_triangle();
    auto single = find_shelling(tri);
    REQUIRE(single.has_value());
    CHECK(single->size() == 1);
}

TEST_CASE("bounded shelling search distinguishes exhaustion from budget") {
    Complex2 wedge = fixtures::two_triangles_shared_vertex();
    BoundedShelling b = find_shelling_bounded(wedge, 1'000'000);
    CHECK(b.status == BoundedStatus::exhausted);
    BoundedShelling tiny = find_shelling_bounded(wedge, 1);
    CHECK(tiny.status == BoundedStatus::budget_exceeded);
}

TEST_CASE("hachimori criterion on the named examples") {
    Complex2 sphere = fixtures::boundary_tetrahedron();
    HachimoriVerdict v = hachimori_criterion(sphere, 1'000'000);
    CHECK(v.kind == HachimoriVerdict::Kind::yes);
    CHECK(v.chi == 1);
    CHECK(v.witness.size() == 1);

    HachimoriVerdict w = hachimori_criterion(fixtures::two_triangles_shared_vertex(), 1'000'000);
    CHECK(w.kind == HachimoriVerdict::Kind::no);
    CHECK(w.reason == "link_disconnected");
    CHECK(w.disconnected_vertex >= 0);

    HachimoriVerdict t = hachimori_criterion(fixtures::single_triangle(), 1'000'000);
    CHECK(t.kind == HachimoriVerdict::Kind::yes);
    CHECK(t.witness.empty());

    HachimoriVerdict u = hachimori_criterion(sphere, 0);
    CHECK(u.kind == HachimoriVerdict::Kind::unknown);
}

TEST_CASE("hachimori witnesses really work") {
    gen::Rng rng(16);
    int yes = 0;
    for (int i = 0; i < 60; ++i) {
        Complex2 k = gen::random_connected_complex(rng, 7, false);
        HachimoriVerdict v = hachimori_criterion(k, 1'000'000);
        if (v.kind != HachimoriVerdict::Kind::yes) continue;
        ++yes;
        CHECK(static_cast<int>(v.witness.size()) == v.chi);
        SubcomplexMask rest = full_mask(k);
        for (TriangleId t : v.witness) rest.triangles.reset(t);
        Subcomplex sub = restrict_to(k, rest);
        CHECK(is_collapsible(sub.complex).has_value());
        // links were checked along the way
        for (std::size_t vid = 0; vid < k.vertex_count(); ++vid)
            CHECK(link_graph(k, static_cast<VertexId>(vid)).connected());
    }
    CHECK(yes > 5);
}

TEST_CASE("shellable implies hachimori-yes and connected links") {
    gen::Rng rng(17);
    int shellable = 0;
    for (int i = 0; i < 50; ++i) {
        Complex2 k = gen::random_connected_complex(rng, 6, false);
        if (!is_pure(k) || k.dimension() != 2) continue;
        auto order = find_shelling(k);
        if (!order) continue;
        ++shellable;
        CHECK(verify_shelling(k, *order).valid);
        HachimoriVerdict v = hachimori_criterion(k, 1'000'000);
        CHECK(v.kind == HachimoriVerdict::Kind::yes);
        for (std::size_t vid = 0; vid < k.vertex_count(); ++vid)
            CHECK(link_graph(k, static_cast<VertexId>(vid)).connected());
    }
    CHECK(shellable > 5);
}

TEST_CASE("second barycentric subdivision cross-check at small budget") {
    // sd^2 of a shellable complex should again be shellable (desk scale)
    auto pair = std::make_shared<Complex2>(fixtures::two_triangles_shared_edge());
    SubdivisionMap m1 = barycentric(pair);
    SubdivisionMap m2 = barycentric(m1.child);
    SubdivisionMap sd2 = compose(m1, m2);
    CHECK(sd2.child->triangle_count() == 72);
    BoundedShelling b = find_shelling_bounded(*sd2.child, 200'000);
    if (b.status == BoundedStatus::found) {
        CHECK(verify_shelling(*sd2.child, b.order).valid);
    } else {
        CHECK(b.status == BoundedStatus::budget_exceeded);
    }

    // composing across a content-equal but rebuilt middle complex takes the
    // label-translation path and must give the same carriers
    SubdivisionMap m2_rebuilt = barycentric(std::make_shared<Complex2>(*m1.child));
    SubdivisionMap sd2b = compose(m1, m2_rebuilt);
    CHECK(*sd2b.child == *sd2.child);
    for (std::size_t t = 0; t < sd2.triangle_carrier.size(); ++t)
        CHECK(sd2b.triangle_carrier[t] == sd2.triangle_carrier[t]);
}
