#include "seglink/geom.hpp"

#include <algorithm>
#include <limits>

namespace seglink {

namespace {

constexpr double kEdgeFilterRel = 1e-14;

void check_component(const std::vector<Vec3>& verts, const char* which) {
    if (verts.size() < 2) {
        throw std::invalid_argument(std::string(which) + ": component needs at least 2 vertices");
    }
    for (const Vec3& v : verts) {
        if (!is_finite(v)) {
            throw std::invalid_argument(std::string(which) + ": non-finite vertex coordinate");
        }
    }
}

void append_edges(const std::vector<Vec3>& verts, bool closed, double min_len,
                  std::vector<Segment>& out, std::size_t& filtered) {
    const std::size_t n = verts.size();
    const std::size_t count = closed ? n : n - 1;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        Segment e{verts[i], verts[(i + 1) % n]};
        if (e.length() <= min_len) {
            ++filtered;
            continue;
        }
        out.push_back(e);
    }
}

}  // namespace

double min_distance(const Segment& s1, const Segment& s2) {
    // Ericson-style closest points between two segments.
    const Vec3 d1 = s1.direction();
    const Vec3 d2 = s2.direction();
    const Vec3 r = s1.a - s2.a;
    const double a = norm_squared(d1);
    const double e = norm_squared(d2);
    const double f = dot(d2, r);
    const double eps = 1e-300;

    double s = 0.0, t = 0.0;
    if (a <= eps && e <= eps) {
        // both points
    } else if (a <= eps) {
        t = std::clamp(f / e, 0.0, 1.0);
    } else {
        const double c = dot(d1, r);
        if (e <= eps) {
            s = std::clamp(-c / a, 0.0, 1.0);
        } else {
            const double b = dot(d1, d2);
            const double denom = a * e - b * b;
            if (denom > 0.0) {
                s = std::clamp((b * f - c * e) / denom, 0.0, 1.0);
            }
            t = (b * s + f) / e;
            if (t < 0.0) {
                t = 0.0;
                s = std::clamp(-c / a, 0.0, 1.0);
            } else if (t > 1.0) {
                t = 1.0;
                s = std::clamp((b - c) / a, 0.0, 1.0);
            }
        }
    }
    return norm(s1.point_at(s) - s2.point_at(t));
}

double bounding_box_diagonal(const PolyLink& link) {
    Vec3 lo{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(),
            std::numeric_limits<double>::infinity()};
    Vec3 hi = -lo;
    auto grow = [&](const std::vector<Vec3>& verts) {
        for (const Vec3& v : verts) {
            lo.x = std::min(lo.x, v.x);
            lo.y = std::min(lo.y, v.y);
            lo.z = std::min(lo.z, v.z);
            hi.x = std::max(hi.x, v.x);
            hi.y = std::max(hi.y, v.y);
            hi.z = std::max(hi.z, v.z);
        }
    };
    grow(link.comp1);
    grow(link.comp2);
    if (link.comp1.empty() && link.comp2.empty()) return 0.0;
    return norm(hi - lo);
}

EdgeLists edges(const PolyLink& link) {
    check_component(link.comp1, "edges(comp1)");
    check_component(link.comp2, "edges(comp2)");

    const double min_len = kEdgeFilterRel * bounding_box_diagonal(link);
    EdgeLists out;
    append_edges(link.comp1, link.closed1, min_len, out.comp1, out.filtered);
    append_edges(link.comp2, link.closed2, min_len, out.comp2, out.filtered);
    return out;
}

}  // namespace seglink
