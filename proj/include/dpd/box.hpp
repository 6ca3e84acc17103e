#pragma once

#include <cmath>

#include "dpd/vec3.hpp"

namespace dpd {

// nearest periodic image of a coordinate difference, result in [-L/2, L/2)
inline double minimum_image_1d(double d, double L) {
    double m = d - L * std::floor(d / L + 0.5);
    // floor can land one ulp outside the half-open interval; fold back
    if (m < -0.5 * L) m += L;
    if (m >= 0.5 * L) m -= L;
    return m;
}

inline Vec3 minimum_image(const Vec3& d, double L) {
    return {minimum_image_1d(d.x, L), minimum_image_1d(d.y, L), minimum_image_1d(d.z, L)};
}

// Same result as minimum_image_1d, but only for d in (-L, L), i.e. for a
// difference of two coordinates that both sit in the primary box. The single
// fold is branch-cheap and agrees bit for bit with the general version on that
// interval (including the half-edge, which both send to -L/2), so hot loops
// over wrapped positions can use it freely.
inline double fold_image_1d(double d, double L) {
    if (d >= 0.5 * L) return d - L;
    if (d < -0.5 * L) return d + L;
    return d;
}

inline Vec3 fold_image(const Vec3& d, double L) {
    return {fold_image_1d(d.x, L), fold_image_1d(d.y, L), fold_image_1d(d.z, L)};
}

// wrap a coordinate into the primary box [0, L)
inline double wrap_1d(double x, double L) {
    double w = x - L * std::floor(x / L);
    if (w >= L) w -= L; // tiny negatives can fold onto exactly L
    if (w < 0.0) w = 0.0;
    return w;
}

inline Vec3 wrap_position(const Vec3& q, double L) {
    return {wrap_1d(q.x, L), wrap_1d(q.y, L), wrap_1d(q.z, L)};
}

} // namespace dpd
