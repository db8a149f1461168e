#pragma once

#include <string_view>

namespace pgsurf {

/// Affine point (1:x:y:z) of the pseudo-Galilean space. x is the absolute coordinate.
struct PGPoint {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

/// Vector of the pseudo-Euclidean plane x = 0. Only the (y, z) components are stored.
struct IsoVector {
    double y = 0.0;
    double z = 0.0;
};

enum class Causal { spacelike, timelike, lightlike };

std::string_view to_string(Causal c);

/// Element of the six-parameter motion group:
///   x' = a1 + x
///   y' = a2 + a3 x + cosh(theta) y + sinh(theta) z
///   z' = a4 + a5 x + sinh(theta) y + cosh(theta) z
struct Motion {
    double a1 = 0.0;
    double a2 = 0.0;
    double a3 = 0.0;
    double a4 = 0.0;
    double a5 = 0.0;
    double theta = 0.0;

    static Motion identity() { return {}; }
};

/// Returns the motion equivalent to applying `first`, then `second`.
Motion compose(const Motion& second, const Motion& first);

Motion inverse(const Motion& m);

PGPoint apply_motion(const Motion& m, const PGPoint& p);

/// Linear part of the motion acting on a displacement (dx, dy, dz).
PGPoint apply_linear(const Motion& m, const PGPoint& d);

/// Hyperbolic rotation acting on an isotropic vector.
IsoVector apply_linear(const Motion& m, const IsoVector& v);

double pg_distance(const PGPoint& a, const PGPoint& b);

/// Minkowskian product on the plane x = 0 with signature (+, -) on (y, z).
constexpr double minkowski_dot(const IsoVector& u, const IsoVector& v) {
    return u.y * v.y - u.z * v.z;
}

/// Lightlike when |u.u| <= 1e-10 * max(1, y^2 + z^2).
Causal causal_character(const IsoVector& u);

inline constexpr double kLightlikeRelTol = 1e-10;

}  // namespace pgsurf
