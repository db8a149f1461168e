#pragma once

#include <functional>

#include "pgsurf/core.hpp"
#include "pgsurf/vec3.hpp"

namespace pgsurf {

/// Value, first and second partials of an immersion r(u1, u2) = (x, y, z) at one
/// parameter point. r12 stands for both mixed partials.
struct Jet2 {
    Vec3 r;
    Vec3 r1;
    Vec3 r2;
    Vec3 r11;
    Vec3 r12;
    Vec3 r22;
};

/// Jet of the moved surface m(r) at the same parameter point.
Jet2 transform(const Motion& m, const Jet2& j);

/// Tolerance on |g1|, |g2| for admissibility.
inline constexpr double kAdmissibleTol = 1e-12;
/// W below this is treated as lightlike.
inline constexpr double kLightlikeWTol = 1e-10;

enum class Direction { non_isotropic, isotropic };

/// Coefficients of ds^2 = (g1 du1 + g2 du2)^2 + omega (h11 du1^2 + 2 h12 du1 du2 + h22 du2^2).
struct FirstForm {
    double g1 = 0.0;
    double g2 = 0.0;
    double h11 = 0.0;
    double h12 = 0.0;
    double h22 = 0.0;

    /// omega is 1 for isotropic directions and 0 otherwise; the caller decides which.
    double ds2(double du1, double du2, Direction direction) const;
};

bool admissible(const Jet2& j);

/// Throws InadmissiblePatch when the patch is not admissible.
FirstForm first_form(const Jet2& j);

/// Unnormalized side tangent x,1 r,2 - x,2 r,1 (its x component is identically zero).
IsoVector side_tangent(const Jet2& j);

/// W = sqrt|(x1 y2 - x2 y1)^2 - (x1 z2 - x2 z1)^2|. Throws LightlikeSurface when W < 1e-10.
double side_norm_W(const Jet2& j);

struct EpsilonNormal {
    int epsilon = 1;  // +1 spacelike, -1 timelike
    IsoVector S;
    IsoVector N;
    double W = 0.0;
};

EpsilonNormal epsilon_and_normal(const Jet2& j);

enum class L_Branch { auto_select, g1, g2 };

struct SecondForm {
    double L11 = 0.0;
    double L12 = 0.0;
    double L22 = 0.0;
    L_Branch branch = L_Branch::g1;
};

/// Second fundamental form. auto_select picks the branch with the larger |g_i|.
/// Throws InadmissiblePatch when the chosen denominator vanishes.
SecondForm second_form(const Jet2& j, int epsilon, const IsoVector& N,
                       L_Branch branch = L_Branch::auto_select);

struct FundamentalData {
    FirstForm first;
    double W = 0.0;
    int epsilon = 1;
    IsoVector N;
    SecondForm second;
};

FundamentalData fundamental_data(const Jet2& j);

struct Curvature {
    double K = 0.0;
    double H = 0.0;
    int epsilon = 1;
    double W = 0.0;
};

Curvature curvature(const FundamentalData& fd);
Curvature curvature(const Jet2& j);

double gaussian_curvature(const Jet2& j);
double mean_curvature(const Jet2& j);

enum class DerivativeMode { analytic, finite_difference };

/// Parametrized surface. Analytic mode calls the jet evaluator directly; finite-difference
/// mode rebuilds the jet from the position map with central differences of step
/// fd_step * max(1, |u|) per coordinate.
class SurfaceFn {
public:
    using JetFn = std::function<Jet2(double, double)>;
    using PositionFn = std::function<Vec3(double, double)>;

    SurfaceFn(JetFn jet, PositionFn position);

    /// Finite-difference-only surface.
    explicit SurfaceFn(PositionFn position);

    SurfaceFn with_mode(DerivativeMode mode, double fd_step = 1e-4) const;

    /// The same surface followed by a motion.
    SurfaceFn moved(const Motion& m) const;

    Jet2 jet(double u1, double u2) const;
    Vec3 position(double u1, double u2) const { return position_(u1, u2); }
    DerivativeMode mode() const { return mode_; }

private:
    Jet2 fd_jet(double u1, double u2) const;

    JetFn jet_;
    PositionFn position_;
    DerivativeMode mode_ = DerivativeMode::analytic;
    double fd_step_ = 1e-4;
};

}  // namespace pgsurf
