#pragma once

#include <cmath>
#include <utility>

#include "seglink/geom.hpp"
#include "seglink/invariants.hpp"
#include "seglink/rng.hpp"

namespace seglink {

/// Draws a random pair of clearly skew segments: endpoints uniform in
/// [-2, 2]^3, rejecting pairs that are short, near-parallel, near-coplanar
/// or close to touching. Pairs drawn here are safe for every oracle
/// (the quadrature stays far from its near-contact refusal).
inline std::pair<Segment, Segment> sample_skew_pair(SplitMix64& rng) {
    for (;;) {
        const auto point = [&] { return Vec3{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)}; };
        Segment s1{point(), point()};
        Segment s2{point(), point()};
        const double l1 = s1.length();
        const double l2 = s2.length();
        if (l1 < 0.3 || l2 < 0.3) continue;
        const double sin_a = norm(cross(s1.direction(), s2.direction())) / (l1 * l2);
        if (sin_a < 0.1) continue;
        const SegmentPairInvariants inv = extract_invariants(s1, s2);
        if (std::abs(inv.d) < 0.1) continue;
        if (min_distance(s1, s2) < 0.05) continue;
        return {s1, s2};
    }
}

/// Draws a random non-parallel invariant tuple with alpha in [0.1, pi-0.1],
/// 0.1 <= |d| <= 10 and all endpoint coordinates within [-10, 10].
inline SegmentPairInvariants sample_invariants(SplitMix64& rng) {
    SegmentPairInvariants inv;
    inv.alpha = rng.uniform(0.1, 3.0415926535897931);
    inv.d = rng.sign() * rng.uniform(0.1, 10.0);
    inv.a1 = rng.uniform(-10.0, 8.0);
    inv.b1 = inv.a1 + rng.uniform(0.1, 10.0 - inv.a1);
    inv.a2 = rng.uniform(-10.0, 8.0);
    inv.b2 = inv.a2 + rng.uniform(0.1, 10.0 - inv.a2);
    return inv;
}

}  // namespace seglink
