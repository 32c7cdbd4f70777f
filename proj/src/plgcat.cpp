#include "plcat/plgcat.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "plcat/homology.hpp"
#include "plcat/parallel.hpp"
#include "plcat/shelling.hpp"

namespace plcat {

namespace {

bool is_point_mask(const SubcomplexMask& m) {
    return m.vertices.count() == 1 && m.edges.none() && m.triangles.none();
}

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

// Triangle sets of a kernel basis of d2, mapped through a restriction.
std::vector<std::vector<TriangleId>> two_cycle_supports(const Complex2& k) {
    std::vector<std::vector<TriangleId>> supports;
    if (k.triangle_count() == 0) return supports;
    for (const auto& z : gf2::kernel_basis(boundary_matrix(k, 2))) supports.push_back(z.ones());
    std::sort(supports.begin(), supports.end());
    return supports;
}

bool pairwise_disjoint(const std::vector<std::vector<TriangleId>>& supports) {
    std::set<TriangleId> seen;
    for (const auto& s : supports)
        for (TriangleId t : s)
            if (!seen.insert(t).second) return false;
    return true;
}

}  // namespace

std::optional<CollapseCertificate> piece_collapsible(const Complex2& k,
                                                     const SubcomplexMask& m) {
    if (m.vertices.none()) return std::nullopt;
    Subcomplex piece = restrict_to(k, m);
    if (!piece.complex.is_connected()) return std::nullopt;
    return is_collapsible(piece.complex);
}

bool verify_cover_certificate(const CoverCertificate& c) {
    const Complex2& k = *c.complex;
    if (!is_valid_subcomplex(k, c.piece1) || !is_valid_subcomplex(k, c.piece2)) return false;
    if (mask_union(c.piece1, c.piece2) != full_mask(k)) return false;
    for (const auto& [mask, cert] : {std::pair{&c.piece1, &c.cert1}, {&c.piece2, &c.cert2}}) {
        if (mask->vertices.none()) return false;
        Subcomplex piece = restrict_to(k, *mask);
        if (!replay_certificate(piece.complex, *cert)) return false;
        if (!is_point_mask(cert->residual)) return false;
    }
    return true;
}

bool plgcat_is_one(const Complex2& k) { return is_collapsible(k).has_value(); }

std::optional<CoverCertificate> cover_via_shelling(const Complex2& k, std::uint64_t budget) {
    if (k.labels.empty()) throw EmptyComplexError("empty complex");
    HachimoriVerdict h = hachimori_criterion(k, budget);
    if (h.kind != HachimoriVerdict::Kind::yes) return std::nullopt;

    // Subdivide each witness triangle; track witnesses and middles by labels
    // (later subdivisions never touch them).
    auto cur = std::make_shared<Complex2>(k);
    SubdivisionMap total = identity_subdivision(cur);
    std::vector<std::vector<std::string>> middles;
    for (TriangleId w : h.witness) {
        const auto& tri = k.triangles[w];
        TriangleId in_cur = total.child->triangle_id(total.child->vertex_id(k.labels[tri[0]]),
                                                     total.child->vertex_id(k.labels[tri[1]]),
                                                     total.child->vertex_id(k.labels[tri[2]]));
        SevenPart sp = seven_part(total.child, in_cur);
        middles.push_back(sp.map.child->face_labels({2, sp.middle_triangle}));
        total = compose(total, sp.map);
    }
    std::shared_ptr<const Complex2> sub = total.child;

    SubcomplexMask middle_cells = empty_mask(*sub);
    for (const auto& labels : middles) {
        TriangleId t = sub->triangle_id(sub->vertex_id(labels[0]), sub->vertex_id(labels[1]),
                                        sub->vertex_id(labels[2]));
        middle_cells.triangles.set(t);
    }

    CoverCertificate cert;
    cert.complex = sub;
    cert.piece1 = mask_difference(full_mask(*sub), middle_cells);
    auto c1 = piece_collapsible(*sub, cert.piece1);
    if (!c1) throw Error("internal: shelling cover piece 1 failed to collapse");
    cert.cert1 = *c1;

    // Piece 2: middle triangles plus a spanning tree of the 1-skeleton that
    // extends a forest of two edges per middle triangle.
    std::vector<EdgeId> forest;
    Dsu dsu(static_cast<int>(sub->vertex_count()));
    for (int t : middle_cells.triangles.ones()) {
        const auto& tri = sub->triangles[t];
        std::array<EdgeId, 3> es{sub->edge_id(tri[0], tri[1]), sub->edge_id(tri[0], tri[2]),
                                 sub->edge_id(tri[1], tri[2])};
        std::sort(es.begin(), es.end());
        // two lowest-id edges; fall back to the other pairs on a cycle
        bool placed = false;
        for (auto [i, j] : {std::pair{0, 1}, {0, 2}, {1, 2}}) {
            Dsu probe = dsu;
            if (probe.unite(sub->edges[es[i]][0], sub->edges[es[i]][1]) &&
                probe.unite(sub->edges[es[j]][0], sub->edges[es[j]][1])) {
                dsu = probe;
                forest.push_back(es[i]);
                forest.push_back(es[j]);
                placed = true;
                break;
            }
        }
        if (!placed) throw Error("internal: middle-triangle forest has a forced cycle");
    }

    // Deterministic BFS from the lexicographically smallest label.
    VertexId start = 0;
    for (std::size_t v = 1; v < sub->vertex_count(); ++v)
        if (sub->labels[v] < sub->labels[start]) start = static_cast<VertexId>(v);
    std::vector<EdgeId> tree = forest;
    std::vector<bool> visited(sub->vertex_count(), false);
    std::vector<VertexId> queue{start};
    visited[start] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        VertexId u = queue[head];
        for (EdgeId e : sub->vertex_edges[u]) {
            VertexId w = sub->edges[e][0] == u ? sub->edges[e][1] : sub->edges[e][0];
            if (dsu.unite(u, w)) tree.push_back(e);
            if (!visited[w]) {
                visited[w] = true;
                queue.push_back(w);
            }
        }
    }

    SubcomplexMask p2 = empty_mask(*sub);
    p2.triangles = middle_cells.triangles;
    for (EdgeId e : tree) p2.edges.set(e);
    p2 = mask_closure(*sub, p2);
    for (std::size_t v = 0; v < sub->vertex_count(); ++v) p2.vertices.set(v);
    cert.piece2 = p2;
    auto c2 = piece_collapsible(*sub, cert.piece2);
    if (!c2) throw Error("internal: shelling cover piece 2 failed to collapse");
    cert.cert2 = *c2;
    cert.subdivision = total;

    if (mask_union(cert.piece1, cert.piece2) != full_mask(*sub))
        throw Error("internal: shelling cover pieces do not cover");
    return cert;
}

namespace {

// Guarded budget shared across ladder stages.
struct Budget {
    std::uint64_t remaining;
    bool overrun = false;
    std::uint64_t take(std::uint64_t want) {
        std::uint64_t got = std::min(want, remaining);
        remaining -= got;
        if (got < want) overrun = true;
        return got;
    }
};

CoverCertificate make_cover(std::shared_ptr<const Complex2> k, SubcomplexMask p1,
                            SubcomplexMask p2, CollapseCertificate c1, CollapseCertificate c2) {
    CoverCertificate cover;
    cover.complex = std::move(k);
    cover.piece1 = std::move(p1);
    cover.piece2 = std::move(p2);
    cover.cert1 = std::move(c1);
    cover.cert2 = std::move(c2);
    return cover;
}

// Evaluates a closure-sweep candidate: pieces are the closures of a triangle
// subset and its complement, stray maximal edges/vertices in both.
struct ClosureSweep {
    std::shared_ptr<const Complex2> kp;
    SubcomplexMask strays;

    explicit ClosureSweep(std::shared_ptr<const Complex2> k) : kp(std::move(k)) {
        const Complex2& c = *kp;
        strays = empty_mask(c);
        for (std::size_t e = 0; e < c.edge_count(); ++e)
            if (c.edge_triangles[e].empty()) strays.edges.set(e);
        for (std::size_t v = 0; v < c.vertex_count(); ++v)
            if (c.vertex_edges[v].empty()) strays.vertices.set(v);
        strays = mask_closure(c, strays);
    }

    std::pair<SubcomplexMask, SubcomplexMask> pieces(std::uint64_t rank) const {
        const Complex2& c = *kp;
        SubcomplexMask a = strays, b = strays;
        a.triangles.set(0);  // triangle 0 always on side A
        for (std::size_t t = 1; t < c.triangle_count(); ++t) {
            bool side_a = t <= 64 && ((rank >> (t - 1)) & 1);
            if (side_a)
                a.triangles.set(t);
            else
                b.triangles.set(t);
        }
        return {mask_closure(c, a), mask_closure(c, b)};
    }

    std::optional<CoverCertificate> test(std::uint64_t rank) const {
        auto [a, b] = pieces(rank);
        auto c1 = piece_collapsible(*kp, a);
        if (!c1) return std::nullopt;
        auto c2 = piece_collapsible(*kp, b);
        if (!c2) return std::nullopt;
        return make_cover(kp, a, b, *c1, *c2);
    }
};

// Skeleton-sweep candidate: rank is a base-3 assignment (both / A / B) per
// triangle; both pieces additionally take the whole 1-skeleton.
struct SkeletonSweep {
    std::shared_ptr<const Complex2> kp;
    std::size_t min_triangles;  // cycle rank of the full 1-skeleton

    explicit SkeletonSweep(std::shared_ptr<const Complex2> k) : kp(std::move(k)) {
        const Complex2& c = *kp;
        std::size_t r1 = c.edge_count() ? gf2::rank(boundary_matrix(c, 1)) : 0;
        min_triangles = c.edge_count() - r1;  // E - V + #components
    }

    std::uint64_t total() const {
        std::uint64_t n = 1;
        for (std::size_t t = 0; t < kp->triangle_count(); ++t) {
            if (n > (~std::uint64_t{0}) / 3) return ~std::uint64_t{0};
            n *= 3;
        }
        return n;
    }

    std::optional<CoverCertificate> test(std::uint64_t rank) const {
        const Complex2& c = *kp;
        SubcomplexMask a = empty_mask(c), b = empty_mask(c);
        a.vertices = Bitset(c.vertex_count(), true);
        a.edges = Bitset(c.edge_count(), true);
        b.vertices = a.vertices;
        b.edges = a.edges;
        std::uint64_t r = rank;
        std::size_t na = 0, nb = 0;
        for (std::size_t t = 0; t < c.triangle_count(); ++t, r /= 3) {
            switch (r % 3) {
                case 0:
                    a.triangles.set(t);
                    b.triangles.set(t);
                    ++na, ++nb;
                    break;
                case 1: a.triangles.set(t); ++na; break;
                default: b.triangles.set(t); ++nb; break;
            }
        }
        if (na < min_triangles || nb < min_triangles) return std::nullopt;
        auto c1 = piece_collapsible(c, a);
        if (!c1) return std::nullopt;
        auto c2 = piece_collapsible(c, b);
        if (!c2) return std::nullopt;
        return make_cover(kp, a, b, *c1, *c2);
    }
};

// Mixed-radix product enumeration of per-support removal pairs. A piece can
// only be collapsible if it kills every 2-cycle, so both pieces remove
// exactly one (distinct) triangle from each support.
struct RemovalPairs {
    std::vector<std::vector<std::pair<TriangleId, TriangleId>>> options;

    explicit RemovalPairs(const std::vector<std::vector<TriangleId>>& supports) {
        for (const auto& s : supports) {
            std::vector<std::pair<TriangleId, TriangleId>> opts;
            for (TriangleId t1 : s)
                for (TriangleId t2 : s)
                    if (t1 != t2) opts.emplace_back(t1, t2);
            options.push_back(std::move(opts));
        }
    }

    std::uint64_t total() const {
        std::uint64_t n = 1;
        for (const auto& o : options) {
            if (n > (~std::uint64_t{0}) / o.size()) return ~std::uint64_t{0};
            n *= o.size();
        }
        return n;
    }

    // Per-support choice for a given rank.
    std::vector<std::pair<TriangleId, TriangleId>> unrank(std::uint64_t rank) const {
        std::vector<std::pair<TriangleId, TriangleId>> out;
        for (const auto& o : options) {
            out.push_back(o[rank % o.size()]);
            rank /= o.size();
        }
        return out;
    }
};

}  // namespace

CoverSearchResult cover_search_cycle_removals(const Complex2& k, std::uint64_t budget) {
    CoverSearchResult res;
    res.stage = "cycle_removals";
    auto supports = two_cycle_supports(k);
    if (supports.empty() || !pairwise_disjoint(supports)) {
        res.status = CoverSearchStatus::not_on_this_triangulation;
        return res;
    }
    auto kp = std::make_shared<Complex2>(k);
    RemovalPairs pairs(supports);

    auto test = [&](std::uint64_t rank) -> bool {
        auto choice = pairs.unrank(rank);
        SubcomplexMask a = full_mask(*kp), b = full_mask(*kp);
        for (const auto& [r1, r2] : choice) {
            if (r1 >= 0) a.triangles.reset(r1);
            if (r2 >= 0) b.triangles.reset(r2);
        }
        return piece_collapsible(*kp, a).has_value() && piece_collapsible(*kp, b).has_value();
    };

    parallel::FirstSuccess fs = parallel::first_success(pairs.total(), budget, test);
    res.candidates = fs.examined;
    if (fs.rank) {
        auto choice = pairs.unrank(*fs.rank);
        SubcomplexMask a = full_mask(*kp), b = full_mask(*kp);
        for (const auto& [r1, r2] : choice) {
            if (r1 >= 0) a.triangles.reset(r1);
            if (r2 >= 0) b.triangles.reset(r2);
        }
        res.cover = make_cover(kp, a, b, *piece_collapsible(*kp, a), *piece_collapsible(*kp, b));
        res.status = CoverSearchStatus::found;
    } else {
        res.status = fs.exhausted ? CoverSearchStatus::not_on_this_triangulation
                                  : CoverSearchStatus::unknown;
    }
    return res;
}

CoverSearchResult cover_search_closure_sweep(const Complex2& k, std::uint64_t budget) {
    CoverSearchResult res;
    res.stage = "closure_sweep";
    if (k.triangle_count() == 0) {
        res.status = CoverSearchStatus::not_on_this_triangulation;
        return res;
    }
    ClosureSweep sweep(std::make_shared<Complex2>(k));
    std::uint64_t total = k.triangle_count() >= 64
                              ? ~std::uint64_t{0}
                              : (std::uint64_t{1} << (k.triangle_count() - 1));
    parallel::FirstSuccess fs =
        parallel::first_success(total, budget, [&](std::uint64_t r) { return sweep.test(r).has_value(); });
    res.candidates = fs.examined;
    if (fs.rank) {
        res.cover = sweep.test(*fs.rank);
        res.status = CoverSearchStatus::found;
    } else {
        res.status = fs.exhausted ? CoverSearchStatus::not_on_this_triangulation
                                  : CoverSearchStatus::unknown;
    }
    return res;
}

CoverSearchResult cover_search_skeleton_sweep(const Complex2& k, std::uint64_t budget) {
    CoverSearchResult res;
    res.stage = "skeleton_sweep";
    SkeletonSweep sweep(std::make_shared<Complex2>(k));
    if (sweep.min_triangles > k.triangle_count()) {
        // no piece with the full 1-skeleton can be acyclic: family is empty
        res.status = CoverSearchStatus::not_on_this_triangulation;
        return res;
    }
    parallel::FirstSuccess fs = parallel::first_success(
        sweep.total(), budget, [&](std::uint64_t r) { return sweep.test(r).has_value(); });
    res.candidates = fs.examined;
    if (fs.rank) {
        res.cover = sweep.test(*fs.rank);
        res.status = CoverSearchStatus::found;
    } else {
        res.status = fs.exhausted ? CoverSearchStatus::not_on_this_triangulation
                                  : CoverSearchStatus::unknown;
    }
    return res;
}

CoverSearchResult search_cover_two(const Complex2& k, std::uint64_t budget) {
    if (!k.is_connected()) throw NotConnectedError("cover search needs a connected complex");
    Budget b{budget};
    CoverSearchResult res;

    // trivial: a collapsible complex covers itself twice
    if (auto c = is_collapsible(k)) {
        auto kp = std::make_shared<Complex2>(k);
        res.status = CoverSearchStatus::found;
        res.stage = "collapsible";
        res.cover = make_cover(kp, full_mask(k), full_mask(k), *c, *c);
        return res;
    }

    // The budget unit is candidate pairs; the shelling stage counts as one
    // candidate and passes the rest through to its internal witness search.
    if (auto cover = cover_via_shelling(k, b.remaining)) {
        res.status = CoverSearchStatus::found;
        res.stage = "shellable_subdivision";
        res.cover = cover;
        res.candidates = 1;
        return res;
    }
    b.take(1);
    res.candidates = 1;

    bool overrun = false;
    for (auto* fn : {&cover_search_cycle_removals, &cover_search_closure_sweep,
                     &cover_search_skeleton_sweep}) {
        CoverSearchResult stage = (*fn)(k, b.remaining);
        b.take(stage.candidates);
        res.candidates += stage.candidates;
        if (stage.status == CoverSearchStatus::found) {
            stage.candidates = res.candidates;
            return stage;
        }
        if (stage.status == CoverSearchStatus::unknown) overrun = true;
    }
    res.status = overrun ? CoverSearchStatus::unknown : CoverSearchStatus::not_on_this_triangulation;
    res.stage = "exhausted";
    return res;
}

EnrichedPairEvaluation evaluate_enriched_pair(const ComplexPlus& kp, const SubcomplexMask& q1,
                                              const SubcomplexMask& q2) {
    const Complex2& plus = *kp.complex;
    EnrichedPairEvaluation ev;
    if (!is_valid_subcomplex(plus, q1) || !is_valid_subcomplex(plus, q2) ||
        mask_union(q1, q2) != full_mask(plus)) {
        ev.outcome = PairOutcome::structural_reject;
        return ev;
    }
    for (std::size_t i = 0; i < kp.tori.size(); ++i) {
        if (!torus_obstruction(kp, q1, q2, i)) {
            ev.outcome = PairOutcome::obstruction_reject;
            ev.failing_torus = i;
            return ev;
        }
    }
    auto c1 = piece_collapsible(plus, q1);
    if (!c1) {
        ev.outcome = PairOutcome::collapse_reject;
        ev.failing_piece = 1;
        return ev;
    }
    auto c2 = piece_collapsible(plus, q2);
    if (!c2) {
        ev.outcome = PairOutcome::collapse_reject;
        ev.failing_piece = 2;
        return ev;
    }
    ev.outcome = PairOutcome::accepted;
    ev.cover = make_cover(kp.complex, q1, q2, *c1, *c2);
    return ev;
}

CoverSearchResult search_cover_two_enriched(const ComplexPlus& kp, std::uint64_t budget) {
    if (!kp.complex || kp.complex->labels.empty()) throw NotEnrichedError("empty enriched complex");
    const Complex2& plus = *kp.complex;
    CoverSearchResult res;
    res.stage = "enriched_removals";

    // 2-cycle supports of the base, in enriched ids.
    Subcomplex base = restrict_to(plus, kp.base);
    auto child_supports = two_cycle_supports(base.complex);
    std::vector<std::vector<TriangleId>> supports;
    for (const auto& s : child_supports) {
        std::vector<TriangleId> mapped;
        for (TriangleId t : s) mapped.push_back(base.triangle_to_parent[t]);
        std::sort(mapped.begin(), mapped.end());
        supports.push_back(std::move(mapped));
    }
    std::sort(supports.begin(), supports.end());
    if (!pairwise_disjoint(supports)) supports.clear();  // fall back to the trivial candidate

    RemovalPairs pairs(supports);
    auto build = [&](std::uint64_t rank) {
        auto choice = pairs.unrank(rank);
        SubcomplexMask k1 = kp.base, k2 = kp.base;
        for (const auto& [r1, r2] : choice) {
            if (r1 >= 0) k1.triangles.reset(r1);
            if (r2 >= 0) k2.triangles.reset(r2);
        }
        SubcomplexMask p1 = k1, p2 = k2;
        for (const auto& h : kp.tori) {
            p1 = mask_union(p1, h.annulus1);
            p2 = mask_union(p2, h.annulus2);
        }
        return std::pair{p1, p2};
    };

    auto test = [&](std::uint64_t rank) -> bool {
        auto [p1, p2] = build(rank);
        return evaluate_enriched_pair(kp, p1, p2).outcome == PairOutcome::accepted;
    };

    parallel::FirstSuccess fs = parallel::first_success(pairs.total(), budget, test);
    res.candidates = fs.examined;
    if (fs.rank) {
        auto [p1, p2] = build(*fs.rank);
        res.cover = evaluate_enriched_pair(kp, p1, p2).cover;
        res.status = CoverSearchStatus::found;
    } else {
        res.status = fs.exhausted ? CoverSearchStatus::not_on_this_triangulation
                                  : CoverSearchStatus::unknown;
    }
    return res;
}

namespace {

PlgcatVerdict bounds_from_search(const CoverSearchResult& search) {
    PlgcatVerdict v;
    v.lower = 2;
    v.reason = "not collapsible";
    v.candidates = search.candidates;
    if (search.status == CoverSearchStatus::found) {
        v.upper = 2;
        v.kind = "exactly2";
        v.cover = search.cover;
    } else {
        v.upper = 3;
        v.kind = "interval";
        v.reason += search.status == CoverSearchStatus::not_on_this_triangulation
                        ? "; no 2-cover found on this triangulation (search exhausted)"
                        : "; 2-cover search ran out of budget";
    }
    return v;
}

PlgcatVerdict bounds_collapsible(CollapseCertificate cert) {
    PlgcatVerdict v;
    v.lower = v.upper = 1;
    v.kind = "exactly1";
    v.reason = "collapsible";
    v.collapse = std::move(cert);
    return v;
}

}  // namespace

PlgcatVerdict plgcat_bounds(const Complex2& k, std::uint64_t budget) {
    if (!k.is_connected()) throw NotConnectedError("plgcat needs a connected complex");
    if (auto cert = is_collapsible(k)) return bounds_collapsible(*cert);
    return bounds_from_search(search_cover_two(k, budget));
}

PlgcatVerdict plgcat_bounds_enriched(const ComplexPlus& kp, std::uint64_t budget) {
    const Complex2& plus = *kp.complex;
    if (!plus.is_connected()) throw NotConnectedError("plgcat needs a connected complex");
    if (auto cert = is_collapsible(plus)) return bounds_collapsible(*cert);
    return bounds_from_search(search_cover_two_enriched(kp, budget));
}

}  // namespace plcat
