#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "pgsurf/grid.hpp"
#include "pgsurf/surface.hpp"

namespace pgsurf {

/// Twice-differentiable scalar function of one variable with analytic derivatives.
struct ScalarC2 {
    std::function<double(double)> value;
    std::function<double(double)> d1;
    std::function<double(double)> d2;
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();

    struct Sample {
        double v, d1, d2;
    };

    /// Throws DomainError outside [lo, hi].
    Sample at(double t) const;

    static ScalarC2 constant(double c);
    /// a + b t
    static ScalarC2 linear(double a, double b);
    /// sum_k coeffs[k] t^k
    static ScalarC2 polynomial(std::vector<double> coeffs);
    /// scale * exp(rate * t)
    static ScalarC2 exponential(double scale, double rate);
};

enum class Kind { first, second };

/// Omega_1: z = f(x) g(y), parametrized by (x, y).
/// Omega_2: x = f(y) g(z), parametrized by (y, z).
struct FactorableSurface {
    Kind kind = Kind::first;
    ScalarC2 f;
    ScalarC2 g;

    Vec3 position(double u1, double u2) const;
    Jet2 jet(double u1, double u2) const;
    SurfaceFn surface_fn(DerivativeMode mode = DerivativeMode::analytic,
                         double fd_step = 1e-4) const;
};

/// K0 = (f g f'' g'' - (f'g')^2) / [1 - (f g')^2]^2. Throws LightlikeLocus on (f g')^2 = 1.
double k_first(const FactorableSurface& s, double x, double y);

/// H0 = f g'' / (2 |1 - (f g')^2|^{3/2}).
double h_first(const FactorableSurface& s, double x, double y);

/// K0 = (f g f'' g'' - (f'g')^2) / [(f g')^2 - (f' g)^2]^2.
double k_second(const FactorableSurface& s, double y, double z);

/// H = [(f g')^2 f'' g - 2 f g (f'g')^2 + (f'g)^2 f g''] / (2 |(f g')^2 - (f' g)^2|^{3/2}).
double h_second(const FactorableSurface& s, double y, double z);

/// Dispatches on the surface kind.
double k_specialized(const FactorableSurface& s, double u1, double u2);
double h_specialized(const FactorableSurface& s, double u1, double u2);

/// Relative size of a specialized-formula denominator below which a point counts as lightlike.
inline constexpr double kLocusTol = 1e-10;

// Sign convention between the specialized factorable formulas and the general pipeline,
// for both kinds:
//   k_specialized = -epsilon * K
//   h_specialized = +H
inline constexpr int kSignK_spacelike = -1;
inline constexpr int kSignK_timelike = 1;
inline constexpr int kSignH = 1;

/// K of the general pipeline expressed in the specialized-formula convention.
constexpr double k_in_factorable_convention(const Curvature& c) {
    return (c.epsilon > 0 ? kSignK_spacelike : kSignK_timelike) * c.K;
}

/// Empirically observed sign gap for one (formula, causal character) pair.
struct SignObservation {
    std::size_t samples = 0;   // points where both values were clearly nonzero
    std::size_t positive = 0;  // specialized / general > 0
    std::size_t negative = 0;

    bool constant() const { return positive == 0 || negative == 0; }
    /// +1, -1, or nullopt when nothing was observed or the sign is not constant.
    std::optional<int> sign() const;
};

struct CrossCheckReport {
    std::size_t points = 0;
    std::size_t spacelike_points = 0;
    std::size_t timelike_points = 0;
    SignObservation k_spacelike, k_timelike, h_spacelike, h_timelike;
    /// max |specialized - sigma * general| with sigma the observed sign (documented sign when
    /// nothing was observed).
    double max_dk = 0.0;
    double max_dh = 0.0;
    /// True when every observed sign matches the documented convention.
    bool matches_documented = true;
};

/// Compares the specialized formulas against the general pipeline on a grid.
/// Throws GridRejected if any grid point is lightlike or the causal character changes
/// between neighbouring points.
CrossCheckReport cross_check(const FactorableSurface& s, const Grid2& grid);

}  // namespace pgsurf
