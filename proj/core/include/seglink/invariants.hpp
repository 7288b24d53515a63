#pragma once

#include <utility>

#include "seglink/geom.hpp"

namespace seglink {

/// Two oriented segments are parallel for our purposes when
/// |L1 x L2| <= kParallelTol * l1 * l2, i.e. sin(alpha) below this bound.
inline constexpr double kParallelTol = 1e-12;

/// The six quantities that pin down a pair of oriented segments up to rigid
/// motion: the angle between them, the signed distance between the parallel
/// planes carrying them, and the endpoint coordinates of each segment along
/// its carrier line measured from the common-perpendicular foot.
///
/// Swapping the argument order of extract_invariants keeps alpha and d and
/// exchanges the (a1,b1) and (a2,b2) coordinate pairs.
struct SegmentPairInvariants {
    double alpha = 0.0;  // angle in [0, pi]
    double d = 0.0;      // signed inter-plane distance
    double a1 = 0.0;     // initial endpoint coordinate, first segment
    double b1 = 0.0;     // final endpoint coordinate, first segment
    double a2 = 0.0;
    double b2 = 0.0;
    bool parallel = false;
    bool degenerate1 = false;
    bool degenerate2 = false;

    bool degenerate() const { return degenerate1 || degenerate2; }
    double l1() const { return b1 - a1; }
    double l2() const { return b2 - a2; }
};

/// Computes the invariants of a segment pair given by endpoints.
///
/// A zero-length segment sets the corresponding degeneracy flag and leaves
/// the numeric fields unspecified. When the directions are parallel within
/// kParallelTol only alpha is meaningful and the parallel flag is set;
/// d, a1, b1, a2, b2 are not computed (the linking number is 0 regardless).
/// The arccos argument is clamped to [-1, 1] and sin^2(alpha) is derived
/// from the clamped cosine so all fields stay mutually consistent.
///
/// Throws std::invalid_argument on non-finite input.
SegmentPairInvariants extract_invariants(const Segment& s1, const Segment& s2);

/// Canonical placement realizing the given invariants: segment i runs in the
/// plane z = -(+)d/2 with its carrier line at angle -(+)alpha/2 to the x axis,
/// so extract_invariants of the result reproduces the input fields.
///
/// Throws std::domain_error when the parallel or degeneracy flags are set or
/// alpha is outside (0, pi); no canonical placement exists there.
std::pair<Segment, Segment> reconstruct_segments(const SegmentPairInvariants& inv);

}  // namespace seglink
