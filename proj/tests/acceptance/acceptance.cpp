// Acceptance suite: one criterion per function, one PASS/FAIL line each.
// Exit status = number of failed criteria.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <random>
#include <sstream>

#include "plcat/collapse.hpp"
#include "plcat/enrichment.hpp"
#include "plcat/gadget.hpp"
#include "plcat/homology.hpp"
#include "plcat/io.hpp"
#include "plcat/plgcat.hpp"
#include "plcat/sat.hpp"
#include "plcat/shelling.hpp"
#include "plcat/subdivision.hpp"
#include "support/fixtures.hpp"
#include "support/gen.hpp"
#include "support/oracles.hpp"

using namespace plcat;
namespace fs = std::filesystem;

namespace {

struct Criterion {
    int number;
    std::string title;
    double limit_seconds;  // <= 0: no limit
};

int failures = 0;

template <typename Fn>
void run_criterion(const Criterion& c, Fn&& body) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
        detail = body();
        ok = true;
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (ok && c.limit_seconds > 0 && secs > c.limit_seconds) {
        ok = false;
        detail += " [time limit exceeded]";
    }
    if (!ok) ++failures;
    std::printf("[%s] criterion %2d: %s (%.2f s%s)%s%s\n", ok ? "PASS" : "FAIL", c.number,
                c.title.c_str(), secs,
                c.limit_seconds > 0 ? (" / limit " + std::to_string((int)c.limit_seconds) + " s").c_str()
                                    : "",
                detail.empty() ? "" : " — ", detail.c_str());
}

void require(bool cond, const std::string& what) {
    if (!cond) throw Error("check failed: " + what);
}

// 1. greedy == exhaustive on 500 random complexes with <= 8 triangles
std::string criterion_greedy_vs_bruteforce() {
    gen::Rng rng(101);
    int collapsible = 0;
    for (int i = 0; i < 500; ++i) {
        Complex2 k = gen::random_connected_complex(rng, 8);
        bool greedy = is_collapsible(k).has_value();
        bool brute = brute_force_collapsible(k);
        require(greedy == brute, "sample " + std::to_string(i));
        collapsible += greedy;
    }
    return "500/500 agree, " + std::to_string(collapsible) + " collapsible";
}

// 2. collapsibility invariant under barycentric / seven-part / composition
std::string criterion_subdivision_invariance() {
    gen::Rng rng(102);
    for (int i = 0; i < 200; ++i) {
        auto k = std::make_shared<Complex2>(gen::random_connected_complex(rng, 10));
        bool verdict = is_collapsible(*k).has_value();

        SubdivisionMap bary = barycentric(k);
        require(is_collapsible(*bary.child).has_value() == verdict, "barycentric");

        int t = gen::pick(rng, static_cast<int>(k->triangle_count()));
        SevenPart sp = seven_part(k, t);
        require(is_collapsible(*sp.map.child).has_value() == verdict, "seven-part");

        int tc = gen::pick(rng, static_cast<int>(bary.child->triangle_count()));
        SubdivisionMap comp = compose(bary, seven_part(bary.child, tc).map);
        require(is_collapsible(*comp.child).has_value() == verdict, "composition");
    }
    return "200/200 samples, all four verdicts identical";
}

// 3. greedy collapse of a subdivided triangle stops exactly at the protected path
std::string criterion_protected_triangle_subdivisions() {
    gen::Rng rng(103);
    for (int i = 0; i < 50; ++i) {
        SubdivisionMap m = gen::random_triangle_subdivision(rng);
        const Complex2& base = *m.parent;
        SubcomplexMask l = empty_mask(base);
        l.edges.set(base.edge_id(base.vertex_id("a"), base.vertex_id("b")));
        l.edges.set(base.edge_id(base.vertex_id("b"), base.vertex_id("c")));
        l = mask_closure(base, l);
        SubcomplexMask protect = corresponding_subcomplex(m, l);
        GreedyResult g = greedy_collapse(*m.child, protect);
        require(g.residual == protect, "sample " + std::to_string(i));
    }
    return "50/50 subdivisions end exactly on the protected path";
}

// 4. torus block invariants
std::string criterion_torus_block() {
    TorusBlock tb = torus_block({"l0", "l1", "l2"}, {"i0", "i1", "i2", "i3", "i4", "i5"});
    require(tb.complex.vertex_count() == 9 && tb.complex.edge_count() == 27 &&
                tb.complex.triangle_count() == 18,
            "grid torus size");
    require(betti(tb.complex) == Betti{1, 2, 1}, "betti (1,2,1)");
    Chain lam = chain_from_mask_edges(tb.longitude);
    require(!is_nullhomologous(tb.complex, lam).nullhomologous, "longitude does not bound");
    for (const SubcomplexMask& a : {tb.annulus1, tb.annulus2}) {
        Subcomplex annulus = restrict_to(tb.complex, a);
        require(collapses_to(annulus.complex, annulus.to_child(tb.longitude)).has_value(),
                "annulus collapses to the longitude");
    }
    return "betti (1,2,1); longitude essential; both annuli collapse to it";
}

// 5. two triangles sharing one vertex: collapsible, not shellable, hachimori-no
std::string criterion_separating_example() {
    Complex2 wedge = fixtures::two_triangles_shared_vertex();
    require(is_collapsible(wedge).has_value(), "collapsible");
    require(!find_shelling(wedge).has_value(), "no shelling");
    HachimoriVerdict v = hachimori_criterion(wedge, 1'000'000);
    require(v.kind == HachimoriVerdict::Kind::no, "hachimori no");
    require(v.reason == "link_disconnected", "link reason");
    return "collapsible, find_shelling none, hachimori no(link_disconnected)";
}

// 6. shellable-subdivision cover of the boundary tetrahedron
std::string criterion_shelling_cover() {
    Complex2 sphere = fixtures::boundary_tetrahedron();
    HachimoriVerdict v = hachimori_criterion(sphere, 1'000'000);
    require(v.kind == HachimoriVerdict::Kind::yes, "hachimori yes");
    require(static_cast<int>(v.witness.size()) == 1 && v.chi == 1, "|witness| == chi == 1");
    auto cover = cover_via_shelling(sphere, 1'000'000);
    require(cover.has_value(), "cover found");
    require(cover->complex->triangle_count() == 10, "subdivided sphere has 10 triangles");
    require(verify_cover_certificate(*cover), "pieces replay to points and cover");
    return "hachimori yes (witness 1); verified 2-cover of the 10-triangle subdivision";
}

// 7. enriched covers from collapsible base pairs
std::string criterion_enriched_cover_from_pair() {
    {
        ComplexPlus kp = enrich(fixtures::single_triangle());
        auto [p1, p2] = cover_from_pair(kp, kp.base, kp.base);
        require(mask_union(p1, p2) == full_mask(*kp.complex), "single triangle: cover");
        for (const SubcomplexMask& p : {p1, p2})
            require(is_collapsible(restrict_to(*kp.complex, p).complex).has_value(),
                    "single triangle: piece collapsible");
    }
    {
        ComplexPlus kp = enrich(fixtures::boundary_tetrahedron());
        SubcomplexMask k1 = kp.base, k2 = kp.base;
        k1.triangles.reset(kp.tori[0].base_triangle);
        k2.triangles.reset(kp.tori[1].base_triangle);
        auto [p1, p2] = cover_from_pair(kp, k1, k2);
        require(mask_union(p1, p2) == full_mask(*kp.complex), "sphere: cover");
        for (const SubcomplexMask& p : {p1, p2})
            require(is_collapsible(restrict_to(*kp.complex, p).complex).has_value(),
                    "sphere: piece collapsible");
    }
    return "single triangle and boundary tetrahedron both yield verified covers";
}

// 8. torus obstruction prunes soundly on the enriched single triangle
std::string criterion_obstruction_soundness() {
    ComplexPlus kp = enrich(fixtures::single_triangle());
    CoverSearchResult r = search_cover_two_enriched(kp, 1'000'000);
    require(r.status == CoverSearchStatus::found, "search found a cover");
    for (std::size_t i = 0; i < kp.tori.size(); ++i)
        require(torus_obstruction(kp, r.cover->piece1, r.cover->piece2, i),
                "found pair passes the obstruction");

    auto [q1, q2] = cover_from_pair(kp, kp.base, kp.base);
    SubcomplexMask q1bad = q1;
    int lam_edge = kp.tori[0].longitude.edges.lowest_set();
    q1bad.edges.reset(lam_edge);
    for (TriangleId t : kp.complex->edge_triangles[lam_edge]) q1bad.triangles.reset(t);
    EnrichedPairEvaluation ev = evaluate_enriched_pair(kp, q1bad, full_mask(*kp.complex));
    require(ev.outcome == PairOutcome::obstruction_reject,
            "violating pair rejected before collapse testing");
    return "every found pair passes; handcrafted violation rejected at the obstruction stage";
}

// 9. betti invariant under emitted certificates and subdivisions
std::string criterion_homology_conservation() {
    gen::Rng rng(109);
    for (int i = 0; i < 150; ++i) {
        Complex2 k = gen::random_connected_complex(rng, 8);
        Betti before = betti(k);

        GreedyResult g = greedy_collapse(k, empty_mask(k));
        require(replay_certificate(k, g.certificate), "certificate replays");
        Subcomplex rest = restrict_to(k, g.residual);
        require(betti(rest.complex) == before, "betti preserved by collapse");

        auto kp = std::make_shared<Complex2>(k);
        require(betti(*barycentric(kp).child) == before, "betti preserved by barycentric");
        int t = gen::pick(rng, static_cast<int>(k.triangle_count()));
        require(betti(*seven_part(kp, t).map.child) == before, "betti preserved by seven-part");
    }
    return "150/150 samples conserve (b0,b1,b2) under collapses and both subdivisions";
}

// 10. pipeline integrity on 20 random formulas
std::string criterion_pipeline() {
    gen::Rng rng(110);
    for (int i = 0; i < 20; ++i) {
        Formula f = gen::random_formula(rng, 10);
        PipelineResult res = run_pipeline(f);
        require(res.report.all_pass(), "contract");
        const Complex2& g = res.gadget.complex;
        const Complex2& plus = *res.enriched.complex;
        require(plus.vertex_count() == g.vertex_count() + 6 * g.triangle_count(),
                "|V(K+)| = V + 6F");
        require(plus.triangle_count() == 19 * g.triangle_count(), "|T(K+)| = 19F");
        require(res.n == static_cast<int>(res.gadget.spheres.size()), "n = sphere count");
        validate_complex_plus(res.enriched);

        auto mine = sat_bruteforce(f);
        auto oracle = oracles::truth_table_sat(f);
        require(mine.has_value() == oracle.satisfiable, "sat verdict");
        if (mine) require(*mine == oracle.first, "first satisfying assignment");
    }
    return "20/20 pipelines pass the contract, counts exact, SAT matches the truth table";
}

// 11. byte-identical CLI artifacts across three runs
std::string criterion_cli_determinism() {
    fs::path dir = fs::temp_directory_path() / "plcat_acceptance_cli";
    fs::remove_all(dir);
    fs::create_directories(dir);
    io::write_file(dir / "sphere.txt", "t a b c\nt a b d\nt a c d\nt b c d\n");
    io::write_file(dir / "tri.txt", "t a b c\n");
    io::write_file(dir / "f.cnf", "p cnf 3 2\n1 -2 3 0\n-1 -2 3 0\n");

    std::string cli = PLCAT_CLI_BIN;
    auto run = [&](const std::string& args) {
        std::string cmd = cli + " " + args + " 2>/dev/null";
        int rc = std::system(cmd.c_str());
        return WEXITSTATUS(rc);
    };

    std::vector<std::string> verdicts, certs, enriched;
    for (int i = 0; i < 3; ++i) {
        std::string tag = std::to_string(i);
        require(run("plgcat " + (dir / "sphere.txt").string() + " --budget 100000 --seed 7 --out " +
                    (dir / ("v" + tag + ".json")).string() + " --json") == 0,
                "plgcat run");
        require(run("collapse " + (dir / "tri.txt").string() + " --seed 7 --out " +
                    (dir / ("c" + tag + ".json")).string() + " --json") == 0,
                "collapse run");
        require(run("reduce " + (dir / "f.cnf").string() + " --gadget toy --seed 7 --out " +
                    (dir / ("r" + tag)).string() + " --json") == 0,
                "reduce run");
        verdicts.push_back(io::read_file(dir / ("v" + tag + ".json")));
        certs.push_back(io::read_file(dir / ("c" + tag + ".json")));
        enriched.push_back(io::read_file(dir / ("r" + tag) / "enriched.json"));
    }
    for (int i = 1; i < 3; ++i) {
        require(verdicts[i] == verdicts[0], "plgcat artifacts identical");
        require(certs[i] == certs[0], "collapse artifacts identical");
        require(enriched[i] == enriched[0], "reduce artifacts identical");
    }
    fs::remove_all(dir);
    return "3 runs of plgcat/collapse/reduce each byte-identical";
}

}  // namespace

int main() {
    run_criterion({1, "greedy collapsibility == exhaustive oracle (500 samples)", 60},
                  criterion_greedy_vs_bruteforce);
    run_criterion({2, "collapsibility invariant under subdivisions (200 samples)", 120},
                  criterion_subdivision_invariance);
    run_criterion({3, "subdivided triangle collapses onto the protected path (50 samples)", 0},
                  criterion_protected_triangle_subdivisions);
    run_criterion({4, "torus block invariants", 1}, criterion_torus_block);
    run_criterion({5, "vertex wedge: collapsible but not shellable", 0},
                  criterion_separating_example);
    run_criterion({6, "shellable-subdivision cover of the boundary tetrahedron", 5},
                  criterion_shelling_cover);
    run_criterion({7, "enriched covers from collapsible base pairs", 10},
                  criterion_enriched_cover_from_pair);
    run_criterion({8, "torus obstruction pruning soundness", 0}, criterion_obstruction_soundness);
    run_criterion({9, "homology conserved by certificates and subdivisions", 0},
                  criterion_homology_conservation);
    run_criterion({10, "reduction pipeline integrity (20 formulas)", 60}, criterion_pipeline);
    run_criterion({11, "CLI determinism across three runs", 0}, criterion_cli_determinism);

    if (failures == 0)
        std::printf("all 11 criteria PASS\n");
    else
        std::printf("%d criteria FAILED\n", failures);
    return failures;
}
