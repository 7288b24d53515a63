#pragma once

#include "seglink/geom.hpp"
#include "seglink/invariants.hpp"

namespace seglink {

/// Which convention produced an LkResult value.
enum class LkBranch { generic = 0, parallel = 1, coplanar_d0 = 2, degenerate = 3 };

inline const char* to_string(LkBranch b) {
    switch (b) {
        case LkBranch::generic: return "generic";
        case LkBranch::parallel: return "parallel";
        case LkBranch::coplanar_d0: return "coplanar_d0";
        case LkBranch::degenerate: return "degenerate";
    }
    return "?";
}

/// Linking-number contribution of one segment pair. The value is always in
/// (-1/2, 1/2); every non-generic branch carries value 0.
struct LkResult {
    double value = 0.0;
    LkBranch branch = LkBranch::generic;
};

/// Coplanar cutoff: |d| at or below kCoplanarTol * max(1, |a1|, |b1|, |a2|, |b2|)
/// is treated as d = 0, where the linking number is defined to be 0. The true
/// function is discontinuous there when the segment projections cross, which
/// is why callers get the branch tag to inspect.
inline constexpr double kCoplanarTol = 1e-13;

/// The arctangent building block of the closed form,
///
///   AT(a,b;d,alpha) = atan( (a b sin(alpha) + d^2 cot(alpha))
///                           / (d sqrt(a^2 + b^2 - 2 a b cos(alpha) + d^2)) ),
///
/// with the conventions AT = sign(d) * pi/2 for alpha in {0, pi} (within
/// kParallelTol on sin(alpha)) and AT = 0 for d = 0 exactly. AT is symmetric
/// in (a, b) and odd in d. Callers that care about the d = 0 discontinuity
/// must route through lk_from_invariants, which decides before AT is consulted.
///
/// Throws std::invalid_argument on NaN input or alpha outside [0, pi].
double at_term(double a, double b, double d, double alpha);

/// Four-term closed form. Routing: degeneracy flags -> (0, degenerate);
/// parallel flag (or sin(alpha) within kParallelTol) -> (0, parallel);
/// |d| within the coplanar cutoff -> (0, coplanar_d0); otherwise
///   ( AT(a1,b2) + AT(b1,a2) - AT(a1,a2) - AT(b1,b2) ) / (4 pi).
LkResult lk_from_invariants(const SegmentPairInvariants& inv);

/// extract_invariants composed with lk_from_invariants.
LkResult lk_segments(const Segment& s1, const Segment& s2);

/// Special case for simple orthogonal segment pairs (alpha = pi/2, both
/// initial endpoints on the common perpendicular, positive distance d):
///
///   lk = -atan( l1 l2 / (d sqrt(l1^2 + l2^2 + d^2)) ) / (4 pi),
///
/// always in (-1/8, 0). Throws std::invalid_argument unless l1, l2, d > 0.
double lk_simple_orthogonal(double l1, double l2, double d);

}  // namespace seglink
