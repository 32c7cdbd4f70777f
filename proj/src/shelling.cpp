#include "plcat/shelling.hpp"

#include <algorithm>
#include <set>

#include "plcat/collapse.hpp"
#include "plcat/homology.hpp"
#include "plcat/parallel.hpp"

namespace plcat {

namespace {

void require_pure_2d(const Complex2& k) {
    if (k.labels.empty()) throw EmptyComplexError("empty complex");
    if (k.dimension() != 2 || !is_pure(k))
        throw NotPureError("shelling needs a pure 2-dimensional complex");
}

// Incremental shelling state: per-simplex counters of placed triangles.
struct ShellState {
    const Complex2& k;
    std::vector<int> vseen, eseen;
    explicit ShellState(const Complex2& k_)
        : k(k_), vseen(k_.vertex_count(), 0), eseen(k_.edge_count(), 0) {}

    // Intersection of triangle t with the union of placed triangles must be
    // the closure of a nonempty subset of t's edges.
    bool admissible(TriangleId t) const {
        const auto& tri = k.triangles[t];
        bool edge_in[3];
        int edges_in = 0;
        for (int i = 0; i < 3; ++i) {
            EdgeId e = k.edge_id(tri[i], tri[(i + 1) % 3]);
            edge_in[i] = eseen[e] > 0;
            edges_in += edge_in[i];
        }
        if (edges_in == 0) return false;
        for (int i = 0; i < 3; ++i) {
            if (vseen[tri[i]] == 0) continue;
            // edges of t at vertex tri[i] are (i-1,i) and (i,i+1)
            bool covered = edge_in[i] || edge_in[(i + 2) % 3];
            if (!covered) return false;
        }
        return true;
    }

    void place(TriangleId t) {
        const auto& tri = k.triangles[t];
        for (int i = 0; i < 3; ++i) {
            ++vseen[tri[i]];
            ++eseen[k.edge_id(tri[i], tri[(i + 1) % 3])];
        }
    }
    void unplace(TriangleId t) {
        const auto& tri = k.triangles[t];
        for (int i = 0; i < 3; ++i) {
            --vseen[tri[i]];
            --eseen[k.edge_id(tri[i], tri[(i + 1) % 3])];
        }
    }
};

struct ShellSearch {
    const Complex2& k;
    ShellState st;
    Bitset used;
    std::vector<TriangleId> order;
    std::set<std::vector<std::uint64_t>> dead;  // used-sets with no completion
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;

    ShellSearch(const Complex2& k_, std::uint64_t budget_)
        : k(k_), st(k_), used(k_.triangle_count()), budget(budget_) {}

    bool dfs() {
        if (order.size() == k.triangle_count()) return true;
        if (++nodes > budget) {
            out_of_budget = true;
            return false;
        }
        if (dead.count(used.words())) return false;
        for (std::size_t t = 0; t < k.triangle_count(); ++t) {
            if (used.test(t)) continue;
            if (!order.empty() && !st.admissible(static_cast<TriangleId>(t))) continue;
            used.set(t);
            st.place(static_cast<TriangleId>(t));
            order.push_back(static_cast<TriangleId>(t));
            if (dfs()) return true;
            order.pop_back();
            st.unplace(static_cast<TriangleId>(t));
            used.reset(t);
            if (out_of_budget) return false;
        }
        dead.insert(used.words());
        return false;
    }
};

}  // namespace

ShellingCheck verify_shelling(const Complex2& k, const std::vector<TriangleId>& order) {
    require_pure_2d(k);
    if (order.size() != k.triangle_count())
        throw NotAPermutationError("order must list every triangle exactly once");
    Bitset seen(k.triangle_count());
    for (TriangleId t : order) {
        if (t < 0 || static_cast<std::size_t>(t) >= k.triangle_count() || seen.test(t))
            throw NotAPermutationError("order must list every triangle exactly once");
        seen.set(t);
    }
    ShellState st(k);
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i > 0 && !st.admissible(order[i])) return {false, static_cast<int>(i)};
        st.place(order[i]);
    }
    return {true, -1};
}

std::optional<std::vector<TriangleId>> find_shelling(const Complex2& k) {
    require_pure_2d(k);
    ShellSearch s(k, ~std::uint64_t{0});
    if (s.dfs()) return s.order;
    return std::nullopt;
}

BoundedShelling find_shelling_bounded(const Complex2& k, std::uint64_t budget) {
    require_pure_2d(k);
    ShellSearch s(k, budget);
    BoundedShelling out;
    if (s.dfs()) {
        out.status = BoundedStatus::found;
        out.order = s.order;
    } else {
        out.status = s.out_of_budget ? BoundedStatus::budget_exceeded : BoundedStatus::exhausted;
    }
    out.nodes = s.nodes;
    return out;
}

namespace {

// Subset of size l with the given rank in the combinatorial number system
// over candidate indices 0..m-1, lexicographic order.
std::vector<int> unrank_combination(std::uint64_t rank, int m, int l,
                                    const std::vector<std::vector<std::uint64_t>>& binom) {
    std::vector<int> out;
    int start = 0;
    for (int slot = 0; slot < l; ++slot) {
        for (int x = start; x < m; ++x) {
            std::uint64_t block = binom[m - 1 - x][l - 1 - slot];
            if (rank < block) {
                out.push_back(x);
                start = x + 1;
                break;
            }
            rank -= block;
        }
    }
    return out;
}

}  // namespace

HachimoriVerdict hachimori_criterion(const Complex2& k, std::uint64_t budget) {
    if (k.labels.empty()) throw EmptyComplexError("empty complex");
    if (!k.is_connected()) throw NotConnectedError("hachimori criterion needs a connected complex");

    HachimoriVerdict v;
    v.chi = reduced_euler(k);
    for (std::size_t vid = 0; vid < k.vertex_count(); ++vid) {
        if (!link_graph(k, static_cast<VertexId>(vid)).connected()) {
            v.kind = HachimoriVerdict::Kind::no;
            v.reason = "link_disconnected";
            v.disconnected_vertex = static_cast<VertexId>(vid);
            return v;
        }
    }
    if (v.chi < 0) {
        v.kind = HachimoriVerdict::Kind::no;
        v.reason = "negative_euler";
        return v;
    }

    int f = static_cast<int>(k.triangle_count());
    int l = v.chi;
    if (l > f) {
        v.kind = HachimoriVerdict::Kind::no;
        v.reason = "no_witness";
        return v;
    }

    // Candidate order: triangles on 2-cycle supports first (removals off
    // every 2-cycle cannot reduce b2), then the rest, by id.
    Bitset cycle_support(k.triangle_count());
    if (k.triangle_count()) {
        for (const auto& z : gf2::kernel_basis(boundary_matrix(k, 2))) cycle_support |= z;
    }
    std::vector<int> candidates;
    for (int t = 0; t < f; ++t)
        if (cycle_support.test(t)) candidates.push_back(t);
    for (int t = 0; t < f; ++t)
        if (!cycle_support.test(t)) candidates.push_back(t);

    // saturating Pascal triangle; the budget caps the scan anyway
    auto sat_add = [](std::uint64_t a, std::uint64_t b) {
        std::uint64_t s = a + b;
        return s < a ? ~std::uint64_t{0} : s;
    };
    std::vector<std::vector<std::uint64_t>> binom(f + 1, std::vector<std::uint64_t>(l + 1, 0));
    for (int n = 0; n <= f; ++n) {
        binom[n][0] = 1;
        for (int r = 1; r <= std::min(n, l); ++r)
            binom[n][r] = sat_add(binom[n - 1][r - 1], n - 1 >= r ? binom[n - 1][r] : 0);
    }
    std::uint64_t total = binom[f][l];

    auto try_subset = [&](std::uint64_t rank) -> bool {
        std::vector<int> picks = unrank_combination(rank, f, l, binom);
        SubcomplexMask removed = empty_mask(k);
        for (int idx : picks) removed.triangles.set(candidates[idx]);
        Subcomplex rest = restrict_to(k, mask_difference(full_mask(k), removed));
        Betti b = betti(rest.complex);
        if (b.b1 != 0 || b.b2 != 0 || b.b0 != 1) return false;  // prune: must be Z2-acyclic
        GreedyResult g = greedy_collapse(rest.complex, empty_mask(rest.complex));
        return g.residual.vertices.count() == 1 && g.residual.edges.none() &&
               g.residual.triangles.none();
    };

    parallel::FirstSuccess fs = parallel::first_success(total, budget, try_subset);
    v.examined = fs.examined;
    if (fs.rank) {
        std::vector<int> picks = unrank_combination(*fs.rank, f, l, binom);
        for (int idx : picks) v.witness.push_back(candidates[idx]);
        std::sort(v.witness.begin(), v.witness.end());
        v.kind = HachimoriVerdict::Kind::yes;
        return v;
    }
    if (fs.exhausted) {
        v.kind = HachimoriVerdict::Kind::no;
        v.reason = "no_witness";
        return v;
    }
    v.kind = HachimoriVerdict::Kind::unknown;
    v.reason = "budget_exhausted";
    return v;
}

}  // namespace plcat
