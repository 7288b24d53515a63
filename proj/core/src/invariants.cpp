#include "seglink/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace seglink {

SegmentPairInvariants extract_invariants(const Segment& s1, const Segment& s2) {
    if (!is_finite(s1.a) || !is_finite(s1.b) || !is_finite(s2.a) || !is_finite(s2.b)) {
        throw std::invalid_argument("extract_invariants: non-finite endpoint");
    }

    SegmentPairInvariants inv;
    const Vec3 dir1 = s1.direction();
    const Vec3 dir2 = s2.direction();
    const double l1 = norm(dir1);
    const double l2 = norm(dir2);
    inv.degenerate1 = (l1 == 0.0);
    inv.degenerate2 = (l2 == 0.0);
    if (inv.degenerate()) return inv;

    const double cos_a = std::clamp(dot(dir1, dir2) / (l1 * l2), -1.0, 1.0);
    inv.alpha = std::acos(cos_a);

    const Vec3 n = cross(dir1, dir2);
    const double n_len = norm(n);
    if (n_len <= kParallelTol * l1 * l2) {
        inv.parallel = true;
        return inv;
    }

    const Vec3 r = s2.a - s1.a;
    inv.d = dot(n, r) / n_len;

    // sin^2 from the clamped cosine, not from n_len, so that alpha, d and the
    // endpoint coordinates solve the same linear system.
    const double sin2 = 1.0 - cos_a * cos_a;
    const Vec3 e1 = (1.0 / l1) * dir1;
    const Vec3 e2 = (1.0 / l2) * dir2;
    inv.a1 = dot(cos_a * e2 - e1, r) / sin2;
    inv.a2 = dot(e2 - cos_a * e1, r) / sin2;
    inv.b1 = inv.a1 + l1;
    inv.b2 = inv.a2 + l2;
    return inv;
}

std::pair<Segment, Segment> reconstruct_segments(const SegmentPairInvariants& inv) {
    if (inv.degenerate()) {
        throw std::domain_error("reconstruct_segments: degenerate segment has no canonical placement");
    }
    if (inv.parallel || !(inv.alpha > 0.0) || !(inv.alpha < std::numbers::pi)) {
        throw std::domain_error("reconstruct_segments: parallel segments have no canonical placement");
    }

    const double ch = std::cos(inv.alpha / 2.0);
    const double sh = std::sin(inv.alpha / 2.0);
    const auto place = [&](double coord, double side) {
        return Vec3{coord * ch, side * coord * sh, side * inv.d / 2.0};
    };
    Segment s1{place(inv.a1, -1.0), place(inv.b1, -1.0)};
    Segment s2{place(inv.a2, +1.0), place(inv.b2, +1.0)};
    return {s1, s2};
}

}  // namespace seglink
