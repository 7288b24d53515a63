#include "seglink/closed_form.hpp"

#include <cmath>
#include <numbers>

namespace seglink {

namespace {
constexpr double kPi = std::numbers::pi;
}

double at_term(double a, double b, double d, double alpha) {
    if (std::isnan(a) || std::isnan(b) || std::isnan(d) || std::isnan(alpha)) {
        throw std::invalid_argument("at_term: NaN input");
    }
    if (!(alpha >= 0.0) || !(alpha <= kPi)) {
        throw std::invalid_argument("at_term: alpha outside [0, pi]");
    }
    if (d == 0.0) return 0.0;

    const double sin_a = std::sin(alpha);
    if (sin_a <= kParallelTol) {
        return std::copysign(kPi / 2.0, d);
    }
    const double cos_a = std::cos(alpha);
    const double num = a * b * sin_a + d * d * (cos_a / sin_a);
    const double den = d * std::sqrt(a * a + b * b - 2.0 * a * b * cos_a + d * d);
    return std::atan(num / den);
}

LkResult lk_from_invariants(const SegmentPairInvariants& inv) {
    if (inv.degenerate()) return {0.0, LkBranch::degenerate};
    if (inv.parallel || std::sin(inv.alpha) <= kParallelTol) return {0.0, LkBranch::parallel};

    const double span = std::max({1.0, std::abs(inv.a1), std::abs(inv.b1),
                                  std::abs(inv.a2), std::abs(inv.b2)});
    if (std::abs(inv.d) <= kCoplanarTol * span) return {0.0, LkBranch::coplanar_d0};

    const double sum = at_term(inv.a1, inv.b2, inv.d, inv.alpha)
                     + at_term(inv.b1, inv.a2, inv.d, inv.alpha)
                     - at_term(inv.a1, inv.a2, inv.d, inv.alpha)
                     - at_term(inv.b1, inv.b2, inv.d, inv.alpha);
    return {sum / (4.0 * kPi), LkBranch::generic};
}

LkResult lk_segments(const Segment& s1, const Segment& s2) {
    return lk_from_invariants(extract_invariants(s1, s2));
}

double lk_simple_orthogonal(double l1, double l2, double d) {
    if (!(l1 > 0.0) || !(l2 > 0.0) || !(d > 0.0)) {
        throw std::invalid_argument("lk_simple_orthogonal: arguments must be positive");
    }
    return -std::atan(l1 * l2 / (d * std::sqrt(l1 * l1 + l2 * l2 + d * d))) / (4.0 * kPi);
}

}  // namespace seglink
