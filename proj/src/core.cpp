#include "pgsurf/core.hpp"

#include <algorithm>
#include <cmath>

namespace pgsurf {

std::string_view to_string(Causal c) {
    switch (c) {
        case Causal::spacelike: return "spacelike";
        case Causal::timelike: return "timelike";
        case Causal::lightlike: return "lightlike";
    }
    return "unknown";
}

Motion compose(const Motion& second, const Motion& first) {
    const double ch = std::cosh(second.theta);
    const double sh = std::sinh(second.theta);
    Motion m;
    m.a1 = second.a1 + first.a1;
    m.a2 = second.a2 + second.a3 * first.a1 + ch * first.a2 + sh * first.a4;
    m.a3 = second.a3 + ch * first.a3 + sh * first.a5;
    m.a4 = second.a4 + second.a5 * first.a1 + sh * first.a2 + ch * first.a4;
    m.a5 = second.a5 + sh * first.a3 + ch * first.a5;
    m.theta = second.theta + first.theta;
    return m;
}

Motion inverse(const Motion& m) {
    // Undo the translation-shear part, then rotate back by -theta.
    const double ch = std::cosh(-m.theta);
    const double sh = std::sinh(-m.theta);
    Motion inv;
    inv.theta = -m.theta;
    inv.a1 = -m.a1;
    // y = ch*(y' - a2 - a3 x) + sh*(z' - a4 - a5 x), with x = x' - a1
    inv.a3 = -(ch * m.a3 + sh * m.a5);
    inv.a5 = -(sh * m.a3 + ch * m.a5);
    inv.a2 = -(ch * m.a2 + sh * m.a4) - inv.a3 * m.a1;
    inv.a4 = -(sh * m.a2 + ch * m.a4) - inv.a5 * m.a1;
    return inv;
}

PGPoint apply_motion(const Motion& m, const PGPoint& p) {
    const PGPoint d = apply_linear(m, p);
    return {m.a1 + d.x, m.a2 + d.y, m.a4 + d.z};
}

PGPoint apply_linear(const Motion& m, const PGPoint& d) {
    const double ch = std::cosh(m.theta);
    const double sh = std::sinh(m.theta);
    return {d.x, m.a3 * d.x + ch * d.y + sh * d.z, m.a5 * d.x + sh * d.y + ch * d.z};
}

IsoVector apply_linear(const Motion& m, const IsoVector& v) {
    const double ch = std::cosh(m.theta);
    const double sh = std::sinh(m.theta);
    return {ch * v.y + sh * v.z, sh * v.y + ch * v.z};
}

double pg_distance(const PGPoint& a, const PGPoint& b) {
    if (a.x != b.x) {
        return std::abs(b.x - a.x);
    }
    const double dy = b.y - a.y;
    const double dz = b.z - a.z;
    return std::sqrt(std::abs(dy * dy - dz * dz));
}

Causal causal_character(const IsoVector& u) {
    const double q = minkowski_dot(u, u);
    const double scale = std::max(1.0, u.y * u.y + u.z * u.z);
    if (std::abs(q) <= kLightlikeRelTol * scale) {
        return Causal::lightlike;
    }
    return q > 0.0 ? Causal::spacelike : Causal::timelike;
}

}  // namespace pgsurf
