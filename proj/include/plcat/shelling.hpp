#ifndef PLCAT_SHELLING_HPP
#define PLCAT_SHELLING_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "plcat/complex.hpp"

namespace plcat {

struct ShellingCheck {
    bool valid = false;
    int violating_index = -1;  // first k (0-based position in the order) that fails
};

// Checks the shelling condition at every position: each new triangle must
// meet the union of the previous ones in a nonempty edge set, with no
// isolated intersection vertex. Throws NotPureError / NotAPermutationError.
ShellingCheck verify_shelling(const Complex2& k, const std::vector<TriangleId>& order);

// Exhaustive backtracking over extensions (memoized on the used set); None is
// a proof of non-shellability. Throws NotPureError.
std::optional<std::vector<TriangleId>> find_shelling(const Complex2& k);

enum class BoundedStatus { found, exhausted, budget_exceeded };

struct BoundedShelling {
    BoundedStatus status = BoundedStatus::exhausted;
    std::vector<TriangleId> order;
    std::uint64_t nodes = 0;
};

// Same search with a node budget; exists for expensive cross-checks (second
// barycentric subdivisions) where running out of budget must stay
// distinguishable from a definitive no.
BoundedShelling find_shelling_bounded(const Complex2& k, std::uint64_t budget);

struct HachimoriVerdict {
    enum class Kind { yes, no, unknown } kind = Kind::unknown;
    std::vector<TriangleId> witness;  // removed triangles on yes
    std::string reason;               // "link_disconnected" / "negative_euler" / "no_witness"
    VertexId disconnected_vertex = -1;
    int chi = 0;  // reduced Euler characteristic
    std::uint64_t examined = 0;
};

// Existence of a shellable subdivision: all vertex links connected and the
// complex collapsible after removing chi-tilde triangles. The witness subset
// search prefers triangles on 2-cycle supports and prunes subsets whose
// removal leaves b1 or b2 nonzero; `budget` caps examined subsets.
HachimoriVerdict hachimori_criterion(const Complex2& k, std::uint64_t budget);

}  // namespace plcat

#endif
