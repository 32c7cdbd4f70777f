#include "plcat/subdivision.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace plcat {

namespace {

// True iff the vertex set of parent simplex a is contained in b's.
bool simplex_subset(const Complex2& k, const SimplexRef& a, const SimplexRef& b) {
    auto verts = [&k](const SimplexRef& s) {
        std::vector<VertexId> v;
        switch (s.dim) {
            case 0: v = {s.id}; break;
            case 1: v = {k.edges[s.id][0], k.edges[s.id][1]}; break;
            default:
                v = {k.triangles[s.id][0], k.triangles[s.id][1], k.triangles[s.id][2]};
        }
        return v;
    };
    auto va = verts(a), vb = verts(b);
    for (VertexId x : va)
        if (std::find(vb.begin(), vb.end(), x) == vb.end()) return false;
    return true;
}

SimplexRef carrier_of_child(const SubdivisionMap& m, int dim, int id) {
    // Carrier of a simplex = the unique minimal common coface of its
    // vertices' carriers; for the subdivisions built here that is simply the
    // vertex carrier of maximal dimension.
    const Complex2& child = *m.child;
    std::vector<SimplexRef> vc;
    if (dim == 1)
        vc = {m.vertex_carrier[child.edges[id][0]], m.vertex_carrier[child.edges[id][1]]};
    else
        vc = {m.vertex_carrier[child.triangles[id][0]], m.vertex_carrier[child.triangles[id][1]],
              m.vertex_carrier[child.triangles[id][2]]};
    SimplexRef best = vc[0];
    for (const auto& c : vc)
        if (c.dim > best.dim) best = c;
    return best;
}

}  // namespace

SubdivisionMap identity_subdivision(std::shared_ptr<const Complex2> k) {
    SubdivisionMap m;
    m.parent = k;
    m.child = k;
    for (std::size_t v = 0; v < k->vertex_count(); ++v)
        m.vertex_carrier.push_back({0, static_cast<int>(v)});
    for (std::size_t e = 0; e < k->edge_count(); ++e)
        m.edge_carrier.push_back({1, static_cast<int>(e)});
    for (std::size_t t = 0; t < k->triangle_count(); ++t)
        m.triangle_carrier.push_back({2, static_cast<int>(t)});
    return m;
}

SubdivisionMap barycentric(std::shared_ptr<const Complex2> kp) {
    const Complex2& k = *kp;
    auto edge_label = [&k](EdgeId e) {
        return "(" + k.labels[k.edges[e][0]] + "|" + k.labels[k.edges[e][1]] + ")";
    };
    auto tri_label = [&k](TriangleId t) {
        const auto& tri = k.triangles[t];
        return "(" + k.labels[tri[0]] + "|" + k.labels[tri[1]] + "|" + k.labels[tri[2]] + ")";
    };

    std::vector<std::vector<std::string>> faces;
    for (std::size_t t = 0; t < k.triangle_count(); ++t) {
        const auto& tri = k.triangles[t];
        for (int i = 0; i < 3; ++i) {
            VertexId a = tri[i], b = tri[(i + 1) % 3];
            EdgeId e = k.edge_id(a, b);
            faces.push_back({k.labels[a], edge_label(e), tri_label(static_cast<TriangleId>(t))});
            faces.push_back({k.labels[b], edge_label(e), tri_label(static_cast<TriangleId>(t))});
        }
    }
    for (std::size_t e = 0; e < k.edge_count(); ++e) {
        if (!k.edge_triangles[e].empty()) continue;
        faces.push_back({k.labels[k.edges[e][0]], edge_label(static_cast<EdgeId>(e))});
        faces.push_back({k.labels[k.edges[e][1]], edge_label(static_cast<EdgeId>(e))});
    }
    for (std::size_t v = 0; v < k.vertex_count(); ++v)
        if (k.vertex_edges[v].empty()) faces.push_back({k.labels[v]});

    SubdivisionMap m;
    m.parent = kp;
    m.child = std::make_shared<Complex2>(from_maximal_faces(faces));
    if (m.child->vertex_count() != k.vertex_count() + k.edge_count() + k.triangle_count())
        throw LabelCollisionError("barycenter labels collide with existing labels");

    std::map<std::string, SimplexRef> by_label;
    for (std::size_t v = 0; v < k.vertex_count(); ++v)
        by_label[k.labels[v]] = {0, static_cast<int>(v)};
    for (std::size_t e = 0; e < k.edge_count(); ++e)
        by_label[edge_label(static_cast<EdgeId>(e))] = {1, static_cast<int>(e)};
    for (std::size_t t = 0; t < k.triangle_count(); ++t)
        by_label[tri_label(static_cast<TriangleId>(t))] = {2, static_cast<int>(t)};

    for (std::size_t v = 0; v < m.child->vertex_count(); ++v)
        m.vertex_carrier.push_back(by_label.at(m.child->labels[v]));
    for (std::size_t e = 0; e < m.child->edge_count(); ++e)
        m.edge_carrier.push_back(carrier_of_child(m, 1, static_cast<int>(e)));
    for (std::size_t t = 0; t < m.child->triangle_count(); ++t)
        m.triangle_carrier.push_back(carrier_of_child(m, 2, static_cast<int>(t)));
    return m;
}

SevenPart seven_part(std::shared_ptr<const Complex2> kp, TriangleId tri) {
    const Complex2& k = *kp;
    if (tri < 0 || static_cast<std::size_t>(tri) >= k.triangle_count())
        throw InvalidTriangleError("triangle id out of range");
    const auto& tv = k.triangles[tri];
    std::array<std::string, 3> corner{k.labels[tv[0]], k.labels[tv[1]], k.labels[tv[2]]};
    std::array<std::string, 3> prime;
    for (int i = 0; i < 3; ++i) {
        std::string l = corner[i] + "'";
        while (k.vertex_index.count(l) || l == prime[0] || (i > 1 && l == prime[1])) l += "'";
        prime[i] = l;
    }

    std::vector<std::vector<std::string>> faces;
    auto all = k.maximal_faces();
    std::vector<std::string> tau{corner[0], corner[1], corner[2]};
    for (auto& f : all)
        if (f != tau) faces.push_back(std::move(f));
    const auto& a = corner[0];
    const auto& b = corner[1];
    const auto& c = corner[2];
    const auto& ap = prime[0];
    const auto& bp = prime[1];
    const auto& cp = prime[2];
    faces.push_back({ap, bp, cp});
    faces.push_back({a, b, ap});
    faces.push_back({b, ap, bp});
    faces.push_back({b, c, bp});
    faces.push_back({c, bp, cp});
    faces.push_back({c, a, cp});
    faces.push_back({a, cp, ap});

    SevenPart out;
    out.map.parent = kp;
    out.map.child = std::make_shared<Complex2>(from_maximal_faces(faces));
    const Complex2& ch = *out.map.child;
    if (ch.vertex_count() != k.vertex_count() + 3)
        throw LabelCollisionError("prime labels collide");

    for (std::size_t v = 0; v < ch.vertex_count(); ++v) {
        VertexId pv = k.vertex_id(ch.labels[v]);
        out.map.vertex_carrier.push_back(pv >= 0 ? SimplexRef{0, pv} : SimplexRef{2, tri});
    }
    for (std::size_t e = 0; e < ch.edge_count(); ++e) {
        const auto& ce = ch.edges[e];
        VertexId pa = k.vertex_id(ch.labels[ce[0]]);
        VertexId pb = k.vertex_id(ch.labels[ce[1]]);
        EdgeId pe = (pa >= 0 && pb >= 0) ? k.edge_id(pa, pb) : -1;
        out.map.edge_carrier.push_back(pe >= 0 ? SimplexRef{1, pe} : SimplexRef{2, tri});
    }
    for (std::size_t t = 0; t < ch.triangle_count(); ++t) {
        const auto& ct = ch.triangles[t];
        VertexId pa = k.vertex_id(ch.labels[ct[0]]);
        VertexId pb = k.vertex_id(ch.labels[ct[1]]);
        VertexId pc = k.vertex_id(ch.labels[ct[2]]);
        TriangleId pt = (pa >= 0 && pb >= 0 && pc >= 0) ? k.triangle_id(pa, pb, pc) : -1;
        out.map.triangle_carrier.push_back(pt >= 0 ? SimplexRef{2, pt} : SimplexRef{2, tri});
    }

    VertexId ia = ch.vertex_id(ap), ib = ch.vertex_id(bp), ic = ch.vertex_id(cp);
    out.middle_triangle = ch.triangle_id(ia, ib, ic);
    assert(out.middle_triangle >= 0);
    return out;
}

SubcomplexMask corresponding_subcomplex(const SubdivisionMap& m, const SubcomplexMask& l) {
    if (!is_valid_subcomplex(*m.parent, l))
        throw InvalidMaskError("mask is not a subcomplex of the parent");
    SubcomplexMask out = empty_mask(*m.child);
    for (std::size_t v = 0; v < m.vertex_carrier.size(); ++v)
        if (l.contains(m.vertex_carrier[v])) out.vertices.set(v);
    for (std::size_t e = 0; e < m.edge_carrier.size(); ++e)
        if (l.contains(m.edge_carrier[e])) out.edges.set(e);
    for (std::size_t t = 0; t < m.triangle_carrier.size(); ++t)
        if (l.contains(m.triangle_carrier[t])) out.triangles.set(t);
    return out;
}

SubdivisionMap compose(const SubdivisionMap& m1, const SubdivisionMap& m2) {
    const Complex2& mid1 = *m1.child;
    const Complex2& mid2 = *m2.parent;
    bool same_object = m1.child == m2.parent;
    if (!same_object && !(mid1 == mid2))
        throw MapMismatchError("m2.parent differs from m1.child");

    // When the shared complex was rebuilt independently, translate ids via labels.
    std::vector<VertexId> vmap(mid2.vertex_count());
    std::vector<EdgeId> emap(mid2.edge_count());
    std::vector<TriangleId> tmap(mid2.triangle_count());
    if (same_object) {
        for (std::size_t i = 0; i < vmap.size(); ++i) vmap[i] = static_cast<int>(i);
        for (std::size_t i = 0; i < emap.size(); ++i) emap[i] = static_cast<int>(i);
        for (std::size_t i = 0; i < tmap.size(); ++i) tmap[i] = static_cast<int>(i);
    } else {
        for (std::size_t v = 0; v < mid2.vertex_count(); ++v)
            vmap[v] = mid1.vertex_id(mid2.labels[v]);
        for (std::size_t e = 0; e < mid2.edge_count(); ++e)
            emap[e] = mid1.edge_id(vmap[mid2.edges[e][0]], vmap[mid2.edges[e][1]]);
        for (std::size_t t = 0; t < mid2.triangle_count(); ++t)
            tmap[t] = mid1.triangle_id(vmap[mid2.triangles[t][0]], vmap[mid2.triangles[t][1]],
                                       vmap[mid2.triangles[t][2]]);
    }
    auto translate = [&](SimplexRef s) -> SimplexRef {
        switch (s.dim) {
            case 0: return {0, vmap[s.id]};
            case 1: return {1, emap[s.id]};
            default: return {2, tmap[s.id]};
        }
    };

    SubdivisionMap m;
    m.parent = m1.parent;
    m.child = m2.child;
    for (const auto& c : m2.vertex_carrier) m.vertex_carrier.push_back(m1.carrier(translate(c)));
    for (const auto& c : m2.edge_carrier) m.edge_carrier.push_back(m1.carrier(translate(c)));
    for (const auto& c : m2.triangle_carrier)
        m.triangle_carrier.push_back(m1.carrier(translate(c)));
    return m;
}

bool verify_subdivision_map(const SubdivisionMap& m) {
    const Complex2& child = *m.child;
    const Complex2& parent = *m.parent;
    // faces of a child simplex must have carriers that are faces of its carrier
    for (std::size_t e = 0; e < child.edge_count(); ++e) {
        const auto& ce = child.edges[e];
        for (VertexId v : {ce[0], ce[1]})
            if (!simplex_subset(parent, m.vertex_carrier[v], m.edge_carrier[e])) return false;
    }
    for (std::size_t t = 0; t < child.triangle_count(); ++t) {
        const auto& ct = child.triangles[t];
        for (int i = 0; i < 3; ++i) {
            if (!simplex_subset(parent, m.vertex_carrier[ct[i]], m.triangle_carrier[t]))
                return false;
            EdgeId e = child.edge_id(ct[i], ct[(i + 1) % 3]);
            if (!simplex_subset(parent, m.edge_carrier[e], m.triangle_carrier[t])) return false;
        }
    }
    // every parent simplex carries something
    std::vector<std::vector<bool>> hit{std::vector<bool>(parent.vertex_count(), false),
                                       std::vector<bool>(parent.edge_count(), false),
                                       std::vector<bool>(parent.triangle_count(), false)};
    auto mark = [&hit](const SimplexRef& s) { hit[s.dim][s.id] = true; };
    for (const auto& c : m.vertex_carrier) mark(c);
    for (const auto& c : m.edge_carrier) mark(c);
    for (const auto& c : m.triangle_carrier) mark(c);
    for (const auto& dimhits : hit)
        for (bool h : dimhits)
            if (!h) return false;
    return true;
}

}  // namespace plcat
