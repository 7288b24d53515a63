#pragma once

#include <array>
#include <cmath>
#include <numbers>

#include "seglink/geom.hpp"
#include "seglink/rng.hpp"

namespace seglink::test {

struct Mat3 {
    std::array<std::array<double, 3>, 3> m{};

    Vec3 apply(const Vec3& v) const {
        return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
                m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
                m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
    }
    Segment apply(const Segment& s) const { return {apply(s.a), apply(s.b)}; }
};

// Uniform random rotation via Marsaglia's quaternion method.
inline Mat3 random_rotation(SplitMix64& rng) {
    const double u1 = rng.uniform();
    const double u2 = rng.uniform();
    const double u3 = rng.uniform();
    const double two_pi = 2.0 * std::numbers::pi;
    const double w = std::sqrt(1.0 - u1) * std::sin(two_pi * u2);
    const double x = std::sqrt(1.0 - u1) * std::cos(two_pi * u2);
    const double y = std::sqrt(u1) * std::sin(two_pi * u3);
    const double z = std::sqrt(u1) * std::cos(two_pi * u3);

    Mat3 r;
    r.m[0] = {1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)};
    r.m[1] = {2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)};
    r.m[2] = {2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)};
    return r;
}

inline Vec3 random_translation(SplitMix64& rng, double scale = 5.0) {
    return {rng.uniform(-scale, scale), rng.uniform(-scale, scale), rng.uniform(-scale, scale)};
}

// Reflection through the z = 0 plane (det = -1).
inline Mat3 mirror_z() {
    Mat3 r;
    r.m[0] = {1, 0, 0};
    r.m[1] = {0, 1, 0};
    r.m[2] = {0, 0, -1};
    return r;
}

}  // namespace seglink::test
