#ifndef PLCAT_COLLAPSE_HPP
#define PLCAT_COLLAPSE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "plcat/complex.hpp"

namespace plcat {

// One elementary collapse: remove a free face together with its unique
// maximal coface (dim coface = dim free + 1).
struct CollapseStep {
    int free_dim = 0;  // 0 = vertex, 1 = edge
    int free_id = -1;
    int coface_id = -1;  // edge id when free_dim==0, triangle id when free_dim==1
    bool operator==(const CollapseStep& o) const {
        return free_dim == o.free_dim && free_id == o.free_id && coface_id == o.coface_id;
    }
};

// Replayable witness of a collapse sequence K \searrow residual.
struct CollapseCertificate {
    std::vector<CollapseStep> steps;
    std::string start_hash;  // content hash of the start complex
    SubcomplexMask residual;
};

// All currently legal steps whose free face is outside `protect`, ordered by
// (free dim, free id). `protect` must be a valid subcomplex of k.
std::vector<CollapseStep> free_faces(const Complex2& k, const SubcomplexMask& protect);

struct GreedyResult {
    SubcomplexMask residual;
    CollapseCertificate certificate;
};

// Repeatedly applies the lowest-ordered available step until none remains.
GreedyResult greedy_collapse(const Complex2& k, const SubcomplexMask& protect);

// True collapse verdict for connected 2-complexes; greedy order does not
// affect it. Returns the certificate on success. Throws NotConnectedError.
std::optional<CollapseCertificate> is_collapsible(const Complex2& k);

// Greedy collapse protecting l; success iff the residual equals l exactly.
std::optional<CollapseCertificate> collapses_to(const Complex2& k, const SubcomplexMask& l);

// Replays a certificate from scratch; true iff every step is legal and the
// final state equals the recorded residual (and expected, when given).
bool replay_certificate(const Complex2& k, const CollapseCertificate& cert,
                        const SubcomplexMask* expected_residual = nullptr);

inline constexpr std::size_t kBruteForceTriangleGuard = 12;

// Exhaustive backtracking over all step orders; true iff some order reaches l
// exactly. Guarded to small complexes (TooLargeError beyond the guard).
bool brute_force_collapses_to(const Complex2& k, const SubcomplexMask& l,
                              std::size_t triangle_guard = kBruteForceTriangleGuard);

// Exhaustive collapsibility: some step order reaches some single vertex.
bool brute_force_collapsible(const Complex2& k,
                             std::size_t triangle_guard = kBruteForceTriangleGuard);

}  // namespace plcat

#endif
