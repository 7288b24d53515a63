#pragma once

#include "seglink/geom.hpp"
#include "seglink/invariants.hpp"

namespace seglink {

/// Adaptive Gauss-Legendre panel quadrature settings. Panels are estimated
/// with base_order nodes per axis against 2*base_order nodes on the same
/// panel; a panel whose estimate difference exceeds its share of the target
/// tolerance is split dyadically, up to max_depth levels.
struct QuadratureConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    int max_depth = 20;
    int base_order = 8;
};

/// Direct numerical evaluation of the defining double integral of the
/// linking number over the two segment parameters:
///
///   lk = 1/(4 pi) * Int Int  (L1', L2', P1(t) - P2(s)) / |P1(t) - P2(s)|^3  dt ds.
///
/// This is the independent check for the closed form; it shares no algebra
/// with it. Refuses (geometry_error) when the segments touch or come within
/// 1e-9 of the configuration scale of touching, where the integrand is
/// near-singular. Throws std::invalid_argument for degenerate segments.
double gauss_lk_segments(const Segment& s1, const Segment& s2,
                         const QuadratureConfig& cfg = {});

/// The reduced two-variable form of the same integral, valid for d > 0:
///
///   lk = -1/(4 pi) * Int_{a1/d}^{b1/d} Int_{a2/d}^{b2/d}
///         sin(alpha) / (1 + p^2 + q^2 - 2 p q cos(alpha))^{3/2}  dp dq.
///
/// For d < 0 negate the result of the mirrored invariants (d -> -d) instead;
/// this function rejects d <= 0 with std::domain_error.
double reduced_double_integral(const SegmentPairInvariants& inv,
                               const QuadratureConfig& cfg = {});

/// The single-integral reduction I(r), valid for d > 0 and alpha in (0, pi):
///
///   I(r) = Int_{a1/d}^{b1/d} sin(alpha) (r - p cos(alpha))
///          / ((1 + p^2 sin^2(alpha)) sqrt(1 + p^2 + r^2 - 2 p r cos(alpha))) dp,
///
/// from which lk = (I(a2/d) - I(b2/d)) / (4 pi).
double single_integral_I(double r, const SegmentPairInvariants& inv,
                         const QuadratureConfig& cfg = {});

/// Convenience wrapper: (I(a2/d) - I(b2/d)) / (4 pi). Requires d > 0.
double lk_single_integral(const SegmentPairInvariants& inv,
                          const QuadratureConfig& cfg = {});

/// Values compared by the antiderivative check: the integrand of the single
/// integral at (p, r), and the central finite difference (step h) of its
/// closed antiderivative  atan( (p r sin(alpha) + cot(alpha))
/// / sqrt(1 + p^2 + r^2 - 2 p r cos(alpha)) ). Agreement is O(h^2).
struct AntiderivativeCheck {
    double analytic = 0.0;
    double numeric = 0.0;
};

AntiderivativeCheck antiderivative_check(double p, double r, double alpha, double h);

}  // namespace seglink
