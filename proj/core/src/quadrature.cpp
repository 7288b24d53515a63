#include "seglink/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <vector>

namespace seglink {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kContactRel = 1e-9;

struct GaussRule {
    std::vector<double> nodes;    // on [-1, 1], ascending
    std::vector<double> weights;
};

// Legendre roots by Newton iteration; full double precision for the small
// orders used here.
GaussRule make_rule(int n) {
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double deriv = 0.0;
        for (int iter = 0; iter < 64; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            deriv = n * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / deriv;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * deriv * deriv);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

// Map nodes are pointer-stable, so returned references stay valid after the
// lock is released; the lock only serialises first-use construction.
const GaussRule& gauss_rule(int order) {
    static std::mutex mutex;
    static std::map<int, GaussRule> cache;
    const std::scoped_lock lock(mutex);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, make_rule(order)).first;
    return it->second;
}

template <typename F>
double panel_1d(const F& f, double x0, double x1, const GaussRule& rule) {
    const double mid = 0.5 * (x0 + x1);
    const double half = 0.5 * (x1 - x0);
    KahanSum acc;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        acc.add(rule.weights[i] * f(mid + half * rule.nodes[i]));
    }
    return half * acc.value();
}

template <typename F>
double panel_2d(const F& f, double x0, double x1, double y0, double y1, const GaussRule& rule) {
    const double mx = 0.5 * (x0 + x1), hx = 0.5 * (x1 - x0);
    const double my = 0.5 * (y0 + y1), hy = 0.5 * (y1 - y0);
    KahanSum acc;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double x = mx + hx * rule.nodes[i];
        KahanSum row;
        for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
            row.add(rule.weights[j] * f(x, my + hy * rule.nodes[j]));
        }
        acc.add(rule.weights[i] * row.value());
    }
    return hx * hy * acc.value();
}

// Depth-first dyadic subdivision with an embedded low/high order estimate.
// The accepted high-order panel values accumulate in a fixed traversal
// order, so the result is bit-stable for a given config.
template <typename F>
double integrate_1d(const F& f, double x0, double x1, const QuadratureConfig& cfg) {
    if (x0 == x1) return 0.0;
    const GaussRule& lo = gauss_rule(cfg.base_order);
    const GaussRule& hi = gauss_rule(2 * cfg.base_order);

    const double whole = std::abs(panel_1d(f, x0, x1, hi));
    const double tol = std::max(cfg.abs_tol, cfg.rel_tol * whole);
    const double span = std::abs(x1 - x0);

    struct Item { double a, b; int depth; };
    std::vector<Item> stack{{x0, x1, 0}};
    KahanSum acc;
    while (!stack.empty()) {
        const Item it = stack.back();
        stack.pop_back();
        const double coarse = panel_1d(f, it.a, it.b, lo);
        const double fine = panel_1d(f, it.a, it.b, hi);
        const double local_tol = tol * (std::abs(it.b - it.a) / span);
        if (std::abs(fine - coarse) <= local_tol || it.depth >= cfg.max_depth) {
            acc.add(fine);
        } else {
            const double m = 0.5 * (it.a + it.b);
            stack.push_back({m, it.b, it.depth + 1});
            stack.push_back({it.a, m, it.depth + 1});
        }
    }
    return acc.value();
}

template <typename F>
double integrate_2d(const F& f, double x0, double x1, double y0, double y1,
                    const QuadratureConfig& cfg) {
    if (x0 == x1 || y0 == y1) return 0.0;
    const GaussRule& lo = gauss_rule(cfg.base_order);
    const GaussRule& hi = gauss_rule(2 * cfg.base_order);

    const double whole = std::abs(panel_2d(f, x0, x1, y0, y1, hi));
    const double tol = std::max(cfg.abs_tol, cfg.rel_tol * whole);
    const double area = std::abs((x1 - x0) * (y1 - y0));

    struct Item { double a, b, c, d; int depth; };
    std::vector<Item> stack{{x0, x1, y0, y1, 0}};
    KahanSum acc;
    while (!stack.empty()) {
        const Item it = stack.back();
        stack.pop_back();
        const double coarse = panel_2d(f, it.a, it.b, it.c, it.d, lo);
        const double fine = panel_2d(f, it.a, it.b, it.c, it.d, hi);
        const double frac = std::abs((it.b - it.a) * (it.d - it.c)) / area;
        if (std::abs(fine - coarse) <= tol * frac || it.depth >= cfg.max_depth) {
            acc.add(fine);
        } else {
            const double mx = 0.5 * (it.a + it.b);
            const double my = 0.5 * (it.c + it.d);
            stack.push_back({mx, it.b, my, it.d, it.depth + 1});
            stack.push_back({it.a, mx, my, it.d, it.depth + 1});
            stack.push_back({mx, it.b, it.c, my, it.depth + 1});
            stack.push_back({it.a, mx, it.c, my, it.depth + 1});
        }
    }
    return acc.value();
}

void check_config(const QuadratureConfig& cfg) {
    if (!(cfg.rel_tol > 0.0) || !(cfg.abs_tol > 0.0) || cfg.max_depth < 1 || cfg.base_order < 2) {
        throw std::invalid_argument("QuadratureConfig: need rel_tol, abs_tol > 0, "
                                    "max_depth >= 1, base_order >= 2");
    }
}

void require_reducible(const SegmentPairInvariants& inv, const char* what) {
    if (inv.degenerate()) throw std::domain_error(std::string(what) + ": degenerate segment");
    if (inv.parallel || !(inv.alpha > 0.0) || !(inv.alpha < kPi)) {
        throw std::domain_error(std::string(what) + ": alpha must lie in (0, pi)");
    }
    if (!(inv.d > 0.0)) {
        throw std::domain_error(std::string(what) +
                                ": requires d > 0 (mirror the invariants and negate for d < 0)");
    }
}

}  // namespace

double gauss_lk_segments(const Segment& s1, const Segment& s2, const QuadratureConfig& cfg) {
    check_config(cfg);
    if (s1.degenerate() || s2.degenerate()) {
        throw std::invalid_argument("gauss_lk_segments: degenerate segment");
    }
    const double scale = std::max({s1.length(), s2.length(), norm(s2.a - s1.a)});
    if (min_distance(s1, s2) <= kContactRel * scale) {
        throw geometry_error("gauss_lk_segments: segments touch or nearly touch");
    }

    const Vec3 d1 = s1.direction();
    const Vec3 d2 = s2.direction();
    const auto integrand = [&](double t, double s) {
        const Vec3 diff = s1.point_at(t) - s2.point_at(s);
        const double r2 = norm_squared(diff);
        return triple(d1, d2, diff) / (r2 * std::sqrt(r2));
    };
    return integrate_2d(integrand, 0.0, 1.0, 0.0, 1.0, cfg) / (4.0 * kPi);
}

double reduced_double_integral(const SegmentPairInvariants& inv, const QuadratureConfig& cfg) {
    check_config(cfg);
    require_reducible(inv, "reduced_double_integral");
    const double sin_a = std::sin(inv.alpha);
    const double cos_a = std::cos(inv.alpha);
    const auto integrand = [&](double p, double q) {
        const double u = 1.0 + p * p + q * q - 2.0 * p * q * cos_a;
        return sin_a / (u * std::sqrt(u));
    };
    const double val = integrate_2d(integrand, inv.a1 / inv.d, inv.b1 / inv.d,
                                    inv.a2 / inv.d, inv.b2 / inv.d, cfg);
    return -val / (4.0 * kPi);
}

double single_integral_I(double r, const SegmentPairInvariants& inv, const QuadratureConfig& cfg) {
    check_config(cfg);
    require_reducible(inv, "single_integral_I");
    const double sin_a = std::sin(inv.alpha);
    const double cos_a = std::cos(inv.alpha);
    const auto integrand = [&](double p) {
        const double u = 1.0 + p * p + r * r - 2.0 * p * r * cos_a;
        return sin_a * (r - p * cos_a) / ((1.0 + p * p * sin_a * sin_a) * std::sqrt(u));
    };
    return integrate_1d(integrand, inv.a1 / inv.d, inv.b1 / inv.d, cfg);
}

double lk_single_integral(const SegmentPairInvariants& inv, const QuadratureConfig& cfg) {
    return (single_integral_I(inv.a2 / inv.d, inv, cfg) -
            single_integral_I(inv.b2 / inv.d, inv, cfg)) / (4.0 * kPi);
}

AntiderivativeCheck antiderivative_check(double p, double r, double alpha, double h) {
    if (!(alpha > 0.0) || !(alpha < kPi)) {
        throw std::invalid_argument("antiderivative_check: alpha must lie in (0, pi)");
    }
    if (!(h > 0.0)) throw std::invalid_argument("antiderivative_check: h must be positive");

    const double sin_a = std::sin(alpha);
    const double cos_a = std::cos(alpha);
    const double cot_a = cos_a / sin_a;
    const auto antiderivative = [&](double pp) {
        const double u = 1.0 + pp * pp + r * r - 2.0 * pp * r * cos_a;
        return std::atan((pp * r * sin_a + cot_a) / std::sqrt(u));
    };

    AntiderivativeCheck out;
    const double u = 1.0 + p * p + r * r - 2.0 * p * r * cos_a;
    out.analytic = sin_a * (r - p * cos_a) / ((1.0 + p * p * sin_a * sin_a) * std::sqrt(u));
    out.numeric = (antiderivative(p + h) - antiderivative(p - h)) / (2.0 * h);
    return out;
}

}  // namespace seglink
