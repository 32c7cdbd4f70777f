#ifndef PLCAT_PLGCAT_HPP
#define PLCAT_PLGCAT_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "plcat/collapse.hpp"
#include "plcat/complex.hpp"
#include "plcat/enrichment.hpp"
#include "plcat/subdivision.hpp"

namespace plcat {

// Witness of a cover by two collapsible subcomplexes. The masks live over
// `complex`; each collapse certificate is stated over the piece restricted to
// a standalone complex (labels are shared, so replay is unambiguous). When
// the cover lives on a subdivision of the queried complex, `subdivision`
// records the carrier map back to it.
struct CoverCertificate {
    std::shared_ptr<const Complex2> complex;
    SubcomplexMask piece1, piece2;
    CollapseCertificate cert1, cert2;
    std::optional<SubdivisionMap> subdivision;
};

// Independent re-check: masks are subcomplexes, they cover, and both
// certificates replay to a single vertex.
bool verify_cover_certificate(const CoverCertificate& c);

// Collapsibility of the piece cut out by the mask; nullopt when the piece is
// empty, disconnected or not collapsible.
std::optional<CollapseCertificate> piece_collapsible(const Complex2& k, const SubcomplexMask& m);

// = is_collapsible; subdivision-invariance makes the plain verdict decide
// category 1 for every subdivision. Throws NotConnectedError.
bool plgcat_is_one(const Complex2& k);

inline constexpr std::uint64_t kDefaultSearchBudget = 1'000'000;

// Cover through a shellable subdivision: on a hachimori yes-witness, each
// witness triangle is split seven ways; piece 1 is everything minus the
// middle triangles, piece 2 the middle triangles plus a spanning tree seeded
// with two edges of each. Returns the certificate over the subdivided
// complex, nullopt when the criterion says no/unknown.
std::optional<CoverCertificate> cover_via_shelling(const Complex2& k, std::uint64_t budget);

enum class CoverSearchStatus { found, not_on_this_triangulation, unknown };

struct CoverSearchResult {
    CoverSearchStatus status = CoverSearchStatus::unknown;
    std::optional<CoverCertificate> cover;
    std::uint64_t candidates = 0;  // candidates charged against the budget
    std::string stage;             // stage that produced the verdict
};

// Search ladder: trivial (collapsible), shellable-subdivision cover, one
// removal per 2-cycle support, complementary-closure pairs, then triangle
// bipartitions with the full 1-skeleton in both pieces. A non-found result
// after exhausting both sweeps is only a statement about this triangulation.
CoverSearchResult search_cover_two(const Complex2& k, std::uint64_t budget);

// Individual sweeps, exposed so they can be exercised directly.
CoverSearchResult cover_search_cycle_removals(const Complex2& k, std::uint64_t budget);
CoverSearchResult cover_search_closure_sweep(const Complex2& k, std::uint64_t budget);
CoverSearchResult cover_search_skeleton_sweep(const Complex2& k, std::uint64_t budget);

enum class PairOutcome { structural_reject, obstruction_reject, collapse_reject, accepted };

struct EnrichedPairEvaluation {
    PairOutcome outcome = PairOutcome::structural_reject;
    std::size_t failing_torus = static_cast<std::size_t>(-1);  // obstruction stage
    int failing_piece = 0;                                     // collapse stage (1 or 2)
    std::optional<CoverCertificate> cover;                     // on accepted
};

// Staged evaluation of one candidate pair on an enriched complex: structural
// coverage first, then the torus obstruction at every glued torus, and only
// then collapse testing.
EnrichedPairEvaluation evaluate_enriched_pair(const ComplexPlus& kp, const SubcomplexMask& q1,
                                              const SubcomplexMask& q2);

// Cover search specialized to enriched complexes: the torus side is fixed to
// the annulus split, the base side ranges over "remove at most one triangle
// per 2-cycle support" subcomplexes, and every candidate passes through
// evaluate_enriched_pair (obstruction pruning before collapse tests).
CoverSearchResult search_cover_two_enriched(const ComplexPlus& kp, std::uint64_t budget);

struct PlgcatVerdict {
    int lower = 1, upper = 3;
    std::string kind;    // "exactly1" / "exactly2" / "interval"
    std::string reason;  // lower-bound evidence / search outcome note
    std::optional<CoverCertificate> cover;          // on upper == 2
    std::optional<CollapseCertificate> collapse;    // on exactly1
    std::uint64_t candidates = 0;
};

// Interval verdict for a connected 2-complex: [1,1] when collapsible, [2,2]
// when a 2-cover was found, honest [2,3] otherwise.
PlgcatVerdict plgcat_bounds(const Complex2& k, std::uint64_t budget);
PlgcatVerdict plgcat_bounds_enriched(const ComplexPlus& kp, std::uint64_t budget);

}  // namespace plcat

#endif
