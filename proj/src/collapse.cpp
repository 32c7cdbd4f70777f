#include "plcat/collapse.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace plcat {

namespace {

// Mutable collapse state over a fixed complex: alive masks plus incidence
// counters. Alive sets stay downward closed because steps only remove a free
// face and its top coface.
struct CollapseState {
    const Complex2& k;
    Bitset alive_v, alive_e, alive_t;
    std::vector<int> vertex_degree;   // alive edges per vertex
    std::vector<int> edge_tri_count;  // alive triangles per edge

    explicit CollapseState(const Complex2& k_)
        : k(k_),
          alive_v(k_.vertex_count(), true),
          alive_e(k_.edge_count(), true),
          alive_t(k_.triangle_count(), true),
          vertex_degree(k_.vertex_count()),
          edge_tri_count(k_.edge_count()) {
        for (std::size_t v = 0; v < k.vertex_count(); ++v)
            vertex_degree[v] = static_cast<int>(k.vertex_edges[v].size());
        for (std::size_t e = 0; e < k.edge_count(); ++e)
            edge_tri_count[e] = static_cast<int>(k.edge_triangles[e].size());
    }

    EdgeId unique_alive_edge(VertexId v) const {
        for (EdgeId e : k.vertex_edges[v])
            if (alive_e.test(e)) return e;
        return -1;
    }
    TriangleId unique_alive_triangle(EdgeId e) const {
        for (TriangleId t : k.edge_triangles[e])
            if (alive_t.test(t)) return t;
        return -1;
    }

    void apply(const CollapseStep& s) {
        if (s.free_dim == 0) {
            alive_v.reset(s.free_id);
            alive_e.reset(s.coface_id);
            const auto& e = k.edges[s.coface_id];
            --vertex_degree[e[0]];
            --vertex_degree[e[1]];
        } else {
            alive_e.reset(s.free_id);
            alive_t.reset(s.coface_id);
            const auto& fe = k.edges[s.free_id];
            --vertex_degree[fe[0]];
            --vertex_degree[fe[1]];
            const auto& tri = k.triangles[s.coface_id];
            for (int i = 0; i < 3; ++i) {
                EdgeId e = k.edge_id(tri[i], tri[(i + 1) % 3]);
                --edge_tri_count[e];
            }
        }
    }

    void undo(const CollapseStep& s) {
        if (s.free_dim == 0) {
            alive_v.set(s.free_id);
            alive_e.set(s.coface_id);
            const auto& e = k.edges[s.coface_id];
            ++vertex_degree[e[0]];
            ++vertex_degree[e[1]];
        } else {
            alive_e.set(s.free_id);
            alive_t.set(s.coface_id);
            const auto& fe = k.edges[s.free_id];
            ++vertex_degree[fe[0]];
            ++vertex_degree[fe[1]];
            const auto& tri = k.triangles[s.coface_id];
            for (int i = 0; i < 3; ++i) {
                EdgeId e = k.edge_id(tri[i], tri[(i + 1) % 3]);
                ++edge_tri_count[e];
            }
        }
    }

    // Lowest (dim, id) legal step off the protected set, if any. A vertex of
    // alive degree 1 cannot lie in an alive triangle (closure), so its unique
    // edge is its unique maximal coface; an edge with one alive triangle
    // likewise.
    std::optional<CollapseStep> first_step(const SubcomplexMask& protect) const {
        for (std::size_t v = 0; v < k.vertex_count(); ++v)
            if (alive_v.test(v) && !protect.vertices.test(v) && vertex_degree[v] == 1)
                return CollapseStep{0, static_cast<int>(v), unique_alive_edge(static_cast<VertexId>(v))};
        for (std::size_t e = 0; e < k.edge_count(); ++e)
            if (alive_e.test(e) && !protect.edges.test(e) && edge_tri_count[e] == 1)
                return CollapseStep{1, static_cast<int>(e), unique_alive_triangle(static_cast<EdgeId>(e))};
        return std::nullopt;
    }

    std::vector<CollapseStep> all_steps(const SubcomplexMask& protect) const {
        std::vector<CollapseStep> out;
        for (std::size_t v = 0; v < k.vertex_count(); ++v)
            if (alive_v.test(v) && !protect.vertices.test(v) && vertex_degree[v] == 1)
                out.push_back({0, static_cast<int>(v), unique_alive_edge(static_cast<VertexId>(v))});
        for (std::size_t e = 0; e < k.edge_count(); ++e)
            if (alive_e.test(e) && !protect.edges.test(e) && edge_tri_count[e] == 1)
                out.push_back({1, static_cast<int>(e), unique_alive_triangle(static_cast<EdgeId>(e))});
        return out;
    }

    SubcomplexMask mask() const { return {alive_v, alive_e, alive_t}; }

    // Exact state key (memoization must never alias two states).
    std::vector<std::uint64_t> state_key() const {
        std::vector<std::uint64_t> key;
        key.reserve(alive_v.words().size() + alive_e.words().size() + alive_t.words().size());
        key.insert(key.end(), alive_v.words().begin(), alive_v.words().end());
        key.insert(key.end(), alive_e.words().begin(), alive_e.words().end());
        key.insert(key.end(), alive_t.words().begin(), alive_t.words().end());
        return key;
    }
};

void check_protect(const Complex2& k, const SubcomplexMask& protect) {
    if (!is_valid_subcomplex(k, protect))
        throw InvalidMaskError("protected set is not a subcomplex");
}

}  // namespace

std::vector<CollapseStep> free_faces(const Complex2& k, const SubcomplexMask& protect) {
    check_protect(k, protect);
    return CollapseState(k).all_steps(protect);
}

GreedyResult greedy_collapse(const Complex2& k, const SubcomplexMask& protect) {
    check_protect(k, protect);
    CollapseState st(k);
    GreedyResult res;
    res.certificate.start_hash = k.content_hash();
    while (auto s = st.first_step(protect)) {
        st.apply(*s);
        res.certificate.steps.push_back(*s);
    }
    res.residual = st.mask();
    res.certificate.residual = res.residual;
    return res;
}

std::optional<CollapseCertificate> is_collapsible(const Complex2& k) {
    if (k.labels.empty()) throw EmptyComplexError("is_collapsible on empty complex");
    if (!k.is_connected()) throw NotConnectedError("is_collapsible needs a connected complex");
    GreedyResult g = greedy_collapse(k, empty_mask(k));
    bool point = g.residual.vertices.count() == 1 && g.residual.edges.none() &&
                 g.residual.triangles.none();
    if (!point) return std::nullopt;
    return g.certificate;
}

std::optional<CollapseCertificate> collapses_to(const Complex2& k, const SubcomplexMask& l) {
    GreedyResult g = greedy_collapse(k, l);
    if (g.residual != l) return std::nullopt;
    return g.certificate;
}

bool replay_certificate(const Complex2& k, const CollapseCertificate& cert,
                        const SubcomplexMask* expected_residual) {
    if (!cert.start_hash.empty() && cert.start_hash != k.content_hash()) return false;
    CollapseState st(k);
    for (const auto& s : cert.steps) {
        if (s.free_dim == 0) {
            if (s.free_id < 0 || static_cast<std::size_t>(s.free_id) >= k.vertex_count())
                return false;
            if (!st.alive_v.test(s.free_id)) return false;
            if (st.vertex_degree[s.free_id] != 1) return false;
            if (st.unique_alive_edge(s.free_id) != s.coface_id) return false;
        } else if (s.free_dim == 1) {
            if (s.free_id < 0 || static_cast<std::size_t>(s.free_id) >= k.edge_count())
                return false;
            if (!st.alive_e.test(s.free_id)) return false;
            if (st.edge_tri_count[s.free_id] != 1) return false;
            if (st.unique_alive_triangle(s.free_id) != s.coface_id) return false;
        } else {
            return false;
        }
        st.apply(s);
    }
    if (st.mask() != cert.residual) return false;
    if (expected_residual && st.mask() != *expected_residual) return false;
    return true;
}

namespace {

using StateSet = std::set<std::vector<std::uint64_t>>;

bool brute_force_search(CollapseState& st, const SubcomplexMask& target, bool to_point,
                        StateSet& failed) {
    if (to_point) {
        if (st.alive_e.none() && st.alive_t.none() && st.alive_v.count() == 1) return true;
    } else if (st.mask() == target) {
        return true;
    }
    std::vector<std::uint64_t> key = st.state_key();
    if (failed.count(key)) return false;
    for (const auto& s : st.all_steps(target)) {
        st.apply(s);
        bool ok = brute_force_search(st, target, to_point, failed);
        st.undo(s);
        if (ok) return true;
    }
    failed.insert(std::move(key));
    return false;
}

}  // namespace

bool brute_force_collapses_to(const Complex2& k, const SubcomplexMask& l,
                              std::size_t triangle_guard) {
    if (k.triangle_count() > triangle_guard)
        throw TooLargeError("brute force guard exceeded");
    check_protect(k, l);
    CollapseState st(k);
    StateSet failed;
    return brute_force_search(st, l, false, failed);
}

bool brute_force_collapsible(const Complex2& k, std::size_t triangle_guard) {
    if (k.triangle_count() > triangle_guard)
        throw TooLargeError("brute force guard exceeded");
    CollapseState st(k);
    StateSet failed;
    SubcomplexMask none = empty_mask(k);
    return brute_force_search(st, none, true, failed);
}

}  // namespace plcat
