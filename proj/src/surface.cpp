#include "pgsurf/surface.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "pgsurf/errors.hpp"

namespace pgsurf {

namespace {

PGPoint as_point(const Vec3& v) { return {v.x, v.y, v.z}; }
Vec3 as_vec(const PGPoint& p) { return {p.x, p.y, p.z}; }

double branch_entry(const Jet2& j, const Vec3& rij, double xij, int eps, const IsoVector& N,
                    L_Branch branch) {
    const bool use_g1 = branch == L_Branch::g1;
    const double gi = use_g1 ? j.r1.x : j.r2.x;
    const Vec3& ri = use_g1 ? j.r1 : j.r2;
    const IsoVector v{gi * rij.y - xij * ri.y, gi * rij.z - xij * ri.z};
    return eps / gi * minkowski_dot(v, N);
}

}  // namespace

Jet2 transform(const Motion& m, const Jet2& j) {
    auto lin = [&](const Vec3& d) { return as_vec(apply_linear(m, as_point(d))); };
    return {as_vec(apply_motion(m, as_point(j.r))), lin(j.r1), lin(j.r2),
            lin(j.r11), lin(j.r12), lin(j.r22)};
}

double FirstForm::ds2(double du1, double du2, Direction direction) const {
    const double lin = g1 * du1 + g2 * du2;
    const double omega = direction == Direction::isotropic ? 1.0 : 0.0;
    return lin * lin + omega * (h11 * du1 * du1 + 2.0 * h12 * du1 * du2 + h22 * du2 * du2);
}

bool admissible(const Jet2& j) {
    return std::abs(j.r1.x) > kAdmissibleTol || std::abs(j.r2.x) > kAdmissibleTol;
}

FirstForm first_form(const Jet2& j) {
    if (!admissible(j)) {
        throw InadmissiblePatch("x,1 = x,2 = 0: pseudo-Euclidean tangent plane");
    }
    return {j.r1.x, j.r2.x,
            j.r1.y * j.r1.y + j.r1.z * j.r1.z,
            j.r1.y * j.r2.y + j.r1.z * j.r2.z,
            j.r2.y * j.r2.y + j.r2.z * j.r2.z};
}

IsoVector side_tangent(const Jet2& j) {
    return {j.r1.x * j.r2.y - j.r2.x * j.r1.y, j.r1.x * j.r2.z - j.r2.x * j.r1.z};
}

double side_norm_W(const Jet2& j) {
    const IsoVector t = side_tangent(j);
    const double W = std::sqrt(std::abs(minkowski_dot(t, t)));
    if (!(W >= kLightlikeWTol)) {
        throw LightlikeSurface("W vanishes: lightlike surface point");
    }
    return W;
}

EpsilonNormal epsilon_and_normal(const Jet2& j) {
    const double W = side_norm_W(j);
    const IsoVector t = side_tangent(j);
    EpsilonNormal out;
    out.W = W;
    out.S = {t.y / W, t.z / W};
    out.epsilon = minkowski_dot(out.S, out.S) > 0.0 ? 1 : -1;
    // N swaps the two components of the side tangent.
    out.N = {t.z / W, t.y / W};
    return out;
}

SecondForm second_form(const Jet2& j, int epsilon, const IsoVector& N, L_Branch branch) {
    if (branch == L_Branch::auto_select) {
        branch = std::abs(j.r1.x) >= std::abs(j.r2.x) ? L_Branch::g1 : L_Branch::g2;
    }
    const double gi = branch == L_Branch::g1 ? j.r1.x : j.r2.x;
    if (std::abs(gi) <= kAdmissibleTol) {
        throw InadmissiblePatch("second form branch denominator vanishes");
    }
    SecondForm s;
    s.branch = branch;
    s.L11 = branch_entry(j, j.r11, j.r11.x, epsilon, N, branch);
    s.L12 = branch_entry(j, j.r12, j.r12.x, epsilon, N, branch);
    s.L22 = branch_entry(j, j.r22, j.r22.x, epsilon, N, branch);
    return s;
}

FundamentalData fundamental_data(const Jet2& j) {
    FundamentalData fd;
    fd.first = first_form(j);
    const EpsilonNormal en = epsilon_and_normal(j);
    fd.W = en.W;
    fd.epsilon = en.epsilon;
    fd.N = en.N;
    fd.second = second_form(j, en.epsilon, en.N);
    return fd;
}

Curvature curvature(const FundamentalData& fd) {
    const auto& [g1, g2, h11, h12, h22] = fd.first;
    const auto& L = fd.second;
    const double W2 = fd.W * fd.W;
    Curvature c;
    c.epsilon = fd.epsilon;
    c.W = fd.W;
    c.K = -fd.epsilon * (L.L11 * L.L22 - L.L12 * L.L12) / W2;
    c.H = -fd.epsilon * (g2 * g2 * L.L11 - 2.0 * g1 * g2 * L.L12 + g1 * g1 * L.L22) / (2.0 * W2);
    return c;
}

Curvature curvature(const Jet2& j) { return curvature(fundamental_data(j)); }

double gaussian_curvature(const Jet2& j) { return curvature(j).K; }

double mean_curvature(const Jet2& j) { return curvature(j).H; }

SurfaceFn::SurfaceFn(JetFn jet, PositionFn position)
    : jet_(std::move(jet)), position_(std::move(position)) {}

SurfaceFn::SurfaceFn(PositionFn position)
    : position_(std::move(position)), mode_(DerivativeMode::finite_difference) {}

SurfaceFn SurfaceFn::with_mode(DerivativeMode mode, double fd_step) const {
    SurfaceFn out = *this;
    out.mode_ = jet_ ? mode : DerivativeMode::finite_difference;
    out.fd_step_ = fd_step;
    return out;
}

SurfaceFn SurfaceFn::moved(const Motion& m) const {
    SurfaceFn out = *this;
    auto pos = position_;
    out.position_ = [pos, m](double u1, double u2) {
        return as_vec(apply_motion(m, as_point(pos(u1, u2))));
    };
    if (jet_) {
        auto jet = jet_;
        out.jet_ = [jet, m](double u1, double u2) { return transform(m, jet(u1, u2)); };
    }
    return out;
}

Jet2 SurfaceFn::jet(double u1, double u2) const {
    return mode_ == DerivativeMode::analytic ? jet_(u1, u2) : fd_jet(u1, u2);
}

Jet2 SurfaceFn::fd_jet(double u1, double u2) const {
    const double h1 = fd_step_ * std::max(1.0, std::abs(u1));
    const double h2 = fd_step_ * std::max(1.0, std::abs(u2));
    const auto& r = position_;
    const Vec3 c = r(u1, u2);
    const Vec3 p1 = r(u1 + h1, u2);
    const Vec3 m1 = r(u1 - h1, u2);
    const Vec3 p2 = r(u1, u2 + h2);
    const Vec3 m2 = r(u1, u2 - h2);
    Jet2 j;
    j.r = c;
    j.r1 = (p1 - m1) * (0.5 / h1);
    j.r2 = (p2 - m2) * (0.5 / h2);
    j.r11 = (p1 - 2.0 * c + m1) * (1.0 / (h1 * h1));
    j.r22 = (p2 - 2.0 * c + m2) * (1.0 / (h2 * h2));
    j.r12 = (r(u1 + h1, u2 + h2) - r(u1 + h1, u2 - h2) - r(u1 - h1, u2 + h2) +
             r(u1 - h1, u2 - h2)) *
            (0.25 / (h1 * h2));
    return j;
}

}  // namespace pgsurf
