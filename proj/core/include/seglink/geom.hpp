#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace seglink {

/// Thrown when an operation is asked to evaluate geometry it cannot handle,
/// e.g. touching or intersecting link components.
class geometry_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// 3D vector / point.
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
    Vec3& operator*=(double s) { x *= s; y *= s; z *= s; return *this; }
};

inline Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
inline Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
inline Vec3 operator*(double s, Vec3 v) { return v *= s; }
inline Vec3 operator*(Vec3 v, double s) { return v *= s; }
inline Vec3 operator-(const Vec3& v) { return {-v.x, -v.y, -v.z}; }

inline double dot(const Vec3& u, const Vec3& v) { return u.x * v.x + u.y * v.y + u.z * v.z; }

inline Vec3 cross(const Vec3& u, const Vec3& v) {
    return {u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z, u.x * v.y - u.y * v.x};
}

/// Scalar triple product (u x v) . w.
inline double triple(const Vec3& u, const Vec3& v, const Vec3& w) { return dot(cross(u, v), w); }

inline double norm_squared(const Vec3& v) { return dot(v, v); }
inline double norm(const Vec3& v) { return std::sqrt(norm_squared(v)); }

inline bool is_finite(const Vec3& v) {
    return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

/// Oriented straight segment from endpoint a to endpoint b.
struct Segment {
    Vec3 a;
    Vec3 b;

    Vec3 direction() const { return b - a; }
    double length() const { return norm(b - a); }
    bool degenerate() const { return a.x == b.x && a.y == b.y && a.z == b.z; }
    Segment reversed() const { return {b, a}; }
    Vec3 point_at(double t) const { return a + t * (b - a); }
};

inline Segment translated(const Segment& s, const Vec3& v) { return {s.a + v, s.b + v}; }

/// Minimum Euclidean distance between two segments (closest-point routine,
/// clamped to both parameter ranges).
double min_distance(const Segment& s1, const Segment& s2);

/// Two ordered polygonal components, each either an open polyline or a
/// closed cycle over its vertex list.
struct PolyLink {
    std::vector<Vec3> comp1;
    std::vector<Vec3> comp2;
    bool closed1 = true;
    bool closed2 = true;
};

struct EdgeLists {
    std::vector<Segment> comp1;
    std::vector<Segment> comp2;
    std::size_t filtered = 0;  // zero-length edges dropped
};

/// Diagonal of the axis-aligned bounding box of all vertices.
double bounding_box_diagonal(const PolyLink& link);

/// Oriented edge lists of both components, honouring the closure flags.
/// Edges shorter than 1e-14 times the bounding-box diagonal are dropped
/// (their contribution to any pairwise sum vanishes with their length).
/// Throws std::invalid_argument for a component with fewer than 2 vertices
/// or non-finite coordinates.
EdgeLists edges(const PolyLink& link);

/// Compensated accumulator; keeps pairwise sums reproducible independent of
/// magnitude ordering.
struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        const double y = x - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    double value() const { return sum; }
};

}  // namespace seglink
