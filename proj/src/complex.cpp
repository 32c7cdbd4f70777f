#include "plcat/complex.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

namespace plcat {

namespace {

// Plain union-find for connectivity queries.
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

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace

VertexId Complex2::vertex_id(const std::string& label) const {
    auto it = vertex_index.find(label);
    return it == vertex_index.end() ? -1 : it->second;
}

EdgeId Complex2::edge_id(VertexId a, VertexId b) const {
    if (a > b) std::swap(a, b);
    auto it = edge_index.find({a, b});
    return it == edge_index.end() ? -1 : it->second;
}

TriangleId Complex2::triangle_id(VertexId a, VertexId b, VertexId c) const {
    std::array<VertexId, 3> t{a, b, c};
    std::sort(t.begin(), t.end());
    auto it = triangle_index.find(t);
    return it == triangle_index.end() ? -1 : it->second;
}

int Complex2::dimension() const {
    if (!triangles.empty()) return 2;
    if (!edges.empty()) return 1;
    if (!labels.empty()) return 0;
    return -1;
}

std::vector<std::string> Complex2::face_labels(const SimplexRef& s) const {
    switch (s.dim) {
        case 0: return {labels[s.id]};
        case 1: return {labels[edges[s.id][0]], labels[edges[s.id][1]]};
        case 2:
            return {labels[triangles[s.id][0]], labels[triangles[s.id][1]],
                    labels[triangles[s.id][2]]};
        default: return {};
    }
}

std::vector<std::vector<std::string>> Complex2::maximal_faces() const {
    // One id tuple per maximal face, sorted lexicographically so extraction +
    // rebuild reproduces the same labeled complex.
    std::vector<std::vector<VertexId>> faces;
    for (std::size_t v = 0; v < labels.size(); ++v)
        if (vertex_edges[v].empty()) faces.push_back({static_cast<VertexId>(v)});
    for (std::size_t e = 0; e < edges.size(); ++e)
        if (edge_triangles[e].empty()) faces.push_back({edges[e][0], edges[e][1]});
    for (const auto& t : triangles) faces.push_back({t[0], t[1], t[2]});
    std::sort(faces.begin(), faces.end());

    std::vector<std::vector<std::string>> out;
    out.reserve(faces.size());
    for (const auto& f : faces) {
        std::vector<std::string> face;
        for (VertexId v : f) face.push_back(labels[v]);
        out.push_back(std::move(face));
    }
    return out;
}

bool Complex2::is_connected() const { return component_count() == 1; }

int Complex2::component_count() const {
    if (labels.empty()) return 0;
    Dsu dsu(static_cast<int>(labels.size()));
    int comps = static_cast<int>(labels.size());
    for (const auto& e : edges)
        if (dsu.unite(e[0], e[1])) --comps;
    return comps;
}

bool Complex2::operator==(const Complex2& o) const {
    if (labels.size() != o.labels.size() || edges.size() != o.edges.size() ||
        triangles.size() != o.triangles.size())
        return false;
    return canonical_text() == o.canonical_text();
}

std::string Complex2::canonical_text() const {
    // Label-sorted listing of every simplex; independent of internal ids.
    std::vector<std::string> lines;
    for (const auto& l : labels) lines.push_back("v " + l);
    for (const auto& e : edges) {
        std::string a = labels[e[0]], b = labels[e[1]];
        if (b < a) std::swap(a, b);
        lines.push_back("e " + a + " " + b);
    }
    for (const auto& t : triangles) {
        std::array<std::string, 3> s{labels[t[0]], labels[t[1]], labels[t[2]]};
        std::sort(s.begin(), s.end());
        lines.push_back("t " + s[0] + " " + s[1] + " " + s[2]);
    }
    std::sort(lines.begin(), lines.end());
    std::string out;
    for (const auto& l : lines) {
        out += l;
        out += '\n';
    }
    return out;
}

std::string Complex2::content_hash() const {
    std::ostringstream os;
    os << std::hex << fnv1a(canonical_text());
    return os.str();
}

Complex2 from_maximal_faces(const std::vector<std::vector<std::string>>& faces) {
    Complex2 k;
    auto intern = [&k](const std::string& label) -> VertexId {
        auto it = k.vertex_index.find(label);
        if (it != k.vertex_index.end()) return it->second;
        VertexId id = static_cast<VertexId>(k.labels.size());
        k.labels.push_back(label);
        k.vertex_index.emplace(label, id);
        return id;
    };

    std::vector<std::array<VertexId, 2>> edge_set;
    std::vector<std::array<VertexId, 3>> tri_set;
    for (const auto& face : faces) {
        if (face.empty() || face.size() > 3)
            throw InvalidFaceError("face must have 1 to 3 vertices");
        for (std::size_t i = 0; i < face.size(); ++i)
            for (std::size_t j = i + 1; j < face.size(); ++j)
                if (face[i] == face[j])
                    throw DuplicateLabelError("face repeats label '" + face[i] + "'");
        std::vector<VertexId> ids;
        for (const auto& l : face) ids.push_back(intern(l));
        if (ids.size() >= 2)
            for (std::size_t i = 0; i < ids.size(); ++i)
                for (std::size_t j = i + 1; j < ids.size(); ++j) {
                    std::array<VertexId, 2> e{ids[i], ids[j]};
                    if (e[0] > e[1]) std::swap(e[0], e[1]);
                    edge_set.push_back(e);
                }
        if (ids.size() == 3) {
            std::array<VertexId, 3> t{ids[0], ids[1], ids[2]};
            std::sort(t.begin(), t.end());
            tri_set.push_back(t);
        }
    }
    std::sort(edge_set.begin(), edge_set.end());
    edge_set.erase(std::unique(edge_set.begin(), edge_set.end()), edge_set.end());
    std::sort(tri_set.begin(), tri_set.end());
    tri_set.erase(std::unique(tri_set.begin(), tri_set.end()), tri_set.end());

    k.edges = std::move(edge_set);
    k.triangles = std::move(tri_set);

    k.vertex_edges.assign(k.labels.size(), {});
    k.vertex_triangles.assign(k.labels.size(), {});
    k.edge_triangles.assign(k.edges.size(), {});
    for (std::size_t e = 0; e < k.edges.size(); ++e) {
        k.edge_index.emplace(k.edges[e], static_cast<EdgeId>(e));
        k.vertex_edges[k.edges[e][0]].push_back(static_cast<EdgeId>(e));
        k.vertex_edges[k.edges[e][1]].push_back(static_cast<EdgeId>(e));
    }
    for (std::size_t t = 0; t < k.triangles.size(); ++t) {
        const auto& tri = k.triangles[t];
        k.triangle_index.emplace(tri, static_cast<TriangleId>(t));
        for (int i = 0; i < 3; ++i) {
            k.vertex_triangles[tri[i]].push_back(static_cast<TriangleId>(t));
            VertexId a = tri[i], b = tri[(i + 1) % 3];
            EdgeId e = k.edge_id(a, b);
            assert(e >= 0);
            if (std::find(k.edge_triangles[e].begin(), k.edge_triangles[e].end(),
                          static_cast<TriangleId>(t)) == k.edge_triangles[e].end())
                k.edge_triangles[e].push_back(static_cast<TriangleId>(t));
        }
    }
    return k;
}

SubcomplexMask empty_mask(const Complex2& k) {
    return {Bitset(k.vertex_count()), Bitset(k.edge_count()), Bitset(k.triangle_count())};
}

SubcomplexMask full_mask(const Complex2& k) {
    return {Bitset(k.vertex_count(), true), Bitset(k.edge_count(), true),
            Bitset(k.triangle_count(), true)};
}

SubcomplexMask mask_union(const SubcomplexMask& a, const SubcomplexMask& b) {
    return {a.vertices | b.vertices, a.edges | b.edges, a.triangles | b.triangles};
}

SubcomplexMask mask_intersection(const SubcomplexMask& a, const SubcomplexMask& b) {
    return {a.vertices & b.vertices, a.edges & b.edges, a.triangles & b.triangles};
}

SubcomplexMask mask_difference(const SubcomplexMask& a, const SubcomplexMask& b) {
    SubcomplexMask out = a;
    for (int i : b.vertices.ones()) out.vertices.reset(i);
    for (int i : b.edges.ones()) out.edges.reset(i);
    for (int i : b.triangles.ones()) out.triangles.reset(i);
    return out;
}

SubcomplexMask mask_closure(const Complex2& k, SubcomplexMask m) {
    for (int t : m.triangles.ones()) {
        const auto& tri = k.triangles[t];
        for (int i = 0; i < 3; ++i) {
            m.vertices.set(tri[i]);
            m.edges.set(k.edge_id(tri[i], tri[(i + 1) % 3]));
        }
    }
    for (int e : m.edges.ones()) {
        m.vertices.set(k.edges[e][0]);
        m.vertices.set(k.edges[e][1]);
    }
    return m;
}

SubcomplexMask mask_from_faces(const Complex2& k,
                               const std::vector<std::vector<std::string>>& faces) {
    SubcomplexMask m = empty_mask(k);
    for (const auto& face : faces) {
        if (face.empty() || face.size() > 3)
            throw InvalidFaceError("face must have 1 to 3 vertices");
        std::vector<VertexId> ids;
        for (const auto& l : face) {
            VertexId v = k.vertex_id(l);
            if (v < 0) throw InvalidSimplexError("unknown vertex label '" + l + "'");
            ids.push_back(v);
        }
        if (ids.size() == 1) {
            m.vertices.set(ids[0]);
        } else if (ids.size() == 2) {
            EdgeId e = k.edge_id(ids[0], ids[1]);
            if (e < 0) throw InvalidSimplexError("edge not in complex");
            m.edges.set(e);
        } else {
            TriangleId t = k.triangle_id(ids[0], ids[1], ids[2]);
            if (t < 0) throw InvalidSimplexError("triangle not in complex");
            m.triangles.set(t);
        }
    }
    return mask_closure(k, m);
}

bool is_valid_subcomplex(const Complex2& k, const SubcomplexMask& m) {
    if (m.vertices.size() != k.vertex_count() || m.edges.size() != k.edge_count() ||
        m.triangles.size() != k.triangle_count())
        return false;
    for (int t : m.triangles.ones()) {
        const auto& tri = k.triangles[t];
        for (int i = 0; i < 3; ++i) {
            if (!m.vertices.test(tri[i])) return false;
            if (!m.edges.test(k.edge_id(tri[i], tri[(i + 1) % 3]))) return false;
        }
    }
    for (int e : m.edges.ones())
        if (!m.vertices.test(k.edges[e][0]) || !m.vertices.test(k.edges[e][1])) return false;
    return true;
}

std::vector<std::vector<std::string>> mask_maximal_faces(const Complex2& k,
                                                         const SubcomplexMask& m) {
    std::vector<std::vector<VertexId>> faces;
    for (int v : m.vertices.ones()) {
        bool covered = false;
        for (EdgeId e : k.vertex_edges[v])
            if (m.edges.test(e)) {
                covered = true;
                break;
            }
        if (!covered) faces.push_back({v});
    }
    for (int e : m.edges.ones()) {
        bool covered = false;
        for (TriangleId t : k.edge_triangles[e])
            if (m.triangles.test(t)) {
                covered = true;
                break;
            }
        if (!covered) faces.push_back({k.edges[e][0], k.edges[e][1]});
    }
    for (int t : m.triangles.ones())
        faces.push_back({k.triangles[t][0], k.triangles[t][1], k.triangles[t][2]});
    std::sort(faces.begin(), faces.end());

    std::vector<std::vector<std::string>> out;
    for (const auto& f : faces) {
        std::vector<std::string> face;
        for (VertexId v : f) face.push_back(k.labels[v]);
        out.push_back(std::move(face));
    }
    return out;
}

SubcomplexMask Subcomplex::to_child(const SubcomplexMask& parent_mask) const {
    SubcomplexMask m = empty_mask(complex);
    for (std::size_t v = 0; v < vertex_to_parent.size(); ++v)
        if (parent_mask.vertices.test(vertex_to_parent[v])) m.vertices.set(v);
    for (std::size_t e = 0; e < edge_to_parent.size(); ++e)
        if (parent_mask.edges.test(edge_to_parent[e])) m.edges.set(e);
    for (std::size_t t = 0; t < triangle_to_parent.size(); ++t)
        if (parent_mask.triangles.test(triangle_to_parent[t])) m.triangles.set(t);
    return m;
}

SubcomplexMask Subcomplex::to_parent(const Complex2& parent,
                                     const SubcomplexMask& child_mask) const {
    SubcomplexMask m = empty_mask(parent);
    for (int v : child_mask.vertices.ones()) m.vertices.set(vertex_to_parent[v]);
    for (int e : child_mask.edges.ones()) m.edges.set(edge_to_parent[e]);
    for (int t : child_mask.triangles.ones()) m.triangles.set(triangle_to_parent[t]);
    return m;
}

Subcomplex restrict_to(const Complex2& k, const SubcomplexMask& m) {
    if (!is_valid_subcomplex(k, m)) throw InvalidMaskError("mask is not a subcomplex");
    Subcomplex sub;
    sub.complex = from_maximal_faces(mask_maximal_faces(k, m));
    sub.vertex_to_parent.assign(sub.complex.vertex_count(), -1);
    for (std::size_t v = 0; v < sub.complex.vertex_count(); ++v) {
        VertexId pv = k.vertex_id(sub.complex.labels[v]);
        assert(pv >= 0);
        sub.vertex_to_parent[v] = pv;
    }
    sub.edge_to_parent.assign(sub.complex.edge_count(), -1);
    for (std::size_t e = 0; e < sub.complex.edge_count(); ++e) {
        const auto& ce = sub.complex.edges[e];
        EdgeId pe = k.edge_id(sub.vertex_to_parent[ce[0]], sub.vertex_to_parent[ce[1]]);
        assert(pe >= 0);
        sub.edge_to_parent[e] = pe;
    }
    sub.triangle_to_parent.assign(sub.complex.triangle_count(), -1);
    for (std::size_t t = 0; t < sub.complex.triangle_count(); ++t) {
        const auto& ct = sub.complex.triangles[t];
        TriangleId pt = k.triangle_id(sub.vertex_to_parent[ct[0]], sub.vertex_to_parent[ct[1]],
                                      sub.vertex_to_parent[ct[2]]);
        assert(pt >= 0);
        sub.triangle_to_parent[t] = pt;
    }
    return sub;
}

bool LinkGraph::connected() const {
    if (nodes.empty()) return true;
    std::map<VertexId, int> idx;
    for (std::size_t i = 0; i < nodes.size(); ++i) idx[nodes[i]] = static_cast<int>(i);
    Dsu dsu(static_cast<int>(nodes.size()));
    int comps = static_cast<int>(nodes.size());
    for (const auto& a : arcs)
        if (dsu.unite(idx.at(a[0]), idx.at(a[1]))) --comps;
    return comps == 1;
}

LinkGraph link_graph(const Complex2& k, VertexId v) {
    if (v < 0 || static_cast<std::size_t>(v) >= k.vertex_count())
        throw InvalidSimplexError("vertex id out of range");
    LinkGraph g;
    for (EdgeId e : k.vertex_edges[v]) {
        const auto& ed = k.edges[e];
        g.nodes.push_back(ed[0] == v ? ed[1] : ed[0]);
    }
    std::sort(g.nodes.begin(), g.nodes.end());
    for (TriangleId t : k.vertex_triangles[v]) {
        std::array<VertexId, 2> arc;
        int j = 0;
        for (int i = 0; i < 3; ++i)
            if (k.triangles[t][i] != v) arc[j++] = k.triangles[t][i];
        g.arcs.push_back(arc);
    }
    std::sort(g.arcs.begin(), g.arcs.end());
    return g;
}

bool DualGraph::connected() const {
    if (node_count == 0) return true;
    Dsu dsu(static_cast<int>(node_count));
    std::size_t comps = node_count;
    for (const auto& a : arcs)
        if (dsu.unite(a[0], a[1])) --comps;
    return comps == 1;
}

DualGraph dual_graph(const Complex2& k) {
    DualGraph g;
    g.node_count = k.triangle_count();
    for (const auto& incident : k.edge_triangles)
        for (std::size_t i = 0; i < incident.size(); ++i)
            for (std::size_t j = i + 1; j < incident.size(); ++j) {
                std::array<TriangleId, 2> a{incident[i], incident[j]};
                if (a[0] > a[1]) std::swap(a[0], a[1]);
                g.arcs.push_back(a);
            }
    std::sort(g.arcs.begin(), g.arcs.end());
    g.arcs.erase(std::unique(g.arcs.begin(), g.arcs.end()), g.arcs.end());
    return g;
}

bool is_pure(const Complex2& k) {
    if (k.labels.empty()) throw EmptyComplexError("is_pure on empty complex");
    int max_dim = k.dimension();
    if (max_dim == 0) return true;
    for (std::size_t v = 0; v < k.vertex_count(); ++v)
        if (k.vertex_edges[v].empty()) return false;  // isolated vertex is maximal
    if (max_dim == 1) return true;
    for (std::size_t e = 0; e < k.edge_count(); ++e)
        if (k.edge_triangles[e].empty()) return false;  // maximal edge
    return true;
}

int reduced_euler(const Complex2& k) {
    if (k.labels.empty()) throw EmptyComplexError("reduced_euler on empty complex");
    return -1 + static_cast<int>(k.vertex_count()) - static_cast<int>(k.edge_count()) +
           static_cast<int>(k.triangle_count());
}

}  // namespace plcat
