#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pgsurf/families.hpp"
#include "pgsurf/ode.hpp"

namespace pgsurf {

/// Numerical solution of a reduced ODE compared against its closed form.
struct ReconstructionReport {
    std::string family;
    double max_error = 0.0;           // max |numeric - closed|
    double max_relative_error = 0.0;  // max |numeric - closed| / max(|closed|, 1e-300)
    double h = 0.0;
    double t0 = 0.0;
    double t1 = 0.0;
    std::size_t steps = 0;
    std::vector<double> t;
    std::vector<double> numeric;
    std::vector<double> closed;
    std::string note;
};

// f' = sign sqrt|K0| (1 - (g0 f)^2) / g0 on [0, x1], f(0) = sign tanh(lambda1) / g0,
// compared with f = sign tanh(sqrt|K0| x + lambda1) / g0.
struct Thm31Problem {
    double K0 = 1.0;
    double g0 = 1.0;
    double lambda1 = 0.0;
    int sign = 1;
    double x1 = 2.0;
    double h = 1e-3;
};

ReconstructionReport reconstruct_thm31(const Thm31Problem& p);

// 2 H0 = f0 g'' / [1 - (f0 g')^2]^{3/2}   (spacelike)
// 2 H0 = f0 g'' / [(f0 g')^2 - 1]^{3/2}   (timelike)
// integrated as the system (g, g') on [y0, y0 + length].
struct Thm32Problem {
    double H0 = 0.5;
    double f0 = 1.0;
    Causal causal = Causal::spacelike;
    double y0 = 0.0;
    double g_init = 0.0;
    double slope_init = 0.0;
    double length = 1.0;
    double h = 1e-3;
};

/// Initial conditions taken from the closed form with shift lambda and additive constant 0.
Thm32Problem thm32_problem(double H0, double f0, double lambda, Causal causal, double y0,
                           double length = 1.0, double h = 1e-3);

/// Closed-form solution of the first-kind constant-H ODE through the problem's initial conditions:
///   spacelike  g = sqrt(s^2 + 1) / (2 f0 H0) + c
///   timelike   g = -sqrt(s^2 - 1) / (2 f0 H0) + c,   s = 2 H0 y + lambda.
struct Thm32ClosedForm {
    double H0 = 0.0;
    double f0 = 1.0;
    double lambda = 0.0;
    double c = 0.0;
    Causal causal = Causal::spacelike;

    double value(double y) const;
    double slope(double y) const;
    double second(double y) const;
};

/// Throws BranchViolation when the initial slope is on the lightlike locus, on the wrong
/// branch, or the corridor leaves the region where the closed form exists.
Thm32ClosedForm thm32_closed_form(const Thm32Problem& p);

ReconstructionReport reconstruct_thm32(const Thm32Problem& p);

// 2 H0 = l^2 w' / [(w^2 - l^2)]^{3/2}   (spacelike, w^2 > l^2)
// 2 H0 = l^2 w' / [(l^2 - w^2)]^{3/2}   (timelike,  w^2 < l^2)
// with w = g'/g and l = lambda1, integrated as the system (w, g) on [z0, z0 + length].
struct Thm42Problem {
    double H0 = 0.5;
    double lambda1 = 1.0;
    double lambda2 = 0.0;
    double lambda3 = 1.0;  // scale of g
    Causal causal = Causal::spacelike;
    double z0 = 1.2;
    double length = 0.8;
    double h = 1e-3;
    /// Overrides w(z0); lambda2 is then refitted from it.
    std::optional<double> w_init{};
};

/// Closed form solving the second-kind constant-H ODE for the prescribed H0:
///   spacelike  w = -|l| s / sqrt(s^2 - 1),  g = l3 exp(-|l| sqrt(s^2 - 1) / (2 H0))
///   timelike   w = +|l| s / sqrt(s^2 + 1),  g = l3 exp(+|l| sqrt(s^2 + 1) / (2 H0))
/// with s = 2 H0 z + lambda2. The exponent coefficient is kappa.
struct Thm42ClosedForm {
    double H0 = 0.0;
    double lambda1 = 1.0;
    double lambda2 = 0.0;
    double lambda3 = 1.0;
    double kappa = 0.0;
    Causal causal = Causal::spacelike;

    double w(double z) const;
    double w_prime(double z) const;
    double g(double z) const;
};

Thm42ClosedForm thm42_closed_form(const Thm42Problem& p);

/// Reports max relative error on g; the note records whether the sign of lambda1 had to be
/// flipped to match the prescribed H0.
ReconstructionReport reconstruct_thm42(const Thm42Problem& p);

// Residuals of a closed form substituted back into its source ODE. `target` is the signed
// constant the left-hand side should equal (for example 2 * attained H).

/// g0 f' / (1 - (g0 f)^2) - target.
double residual_thm31_ode(const ScalarC2& f, double g0, double target, double x);

/// f0 g'' / |1 - (f0 g')^2|^{3/2} - target, with the branch checked against `causal`.
double residual_thm32_ode(const ScalarC2& g, double f0, Causal causal, double target, double y);

/// l^2 (g'/g)' / |(g'/g)^2 - l^2|^{3/2} - target, with the branch checked against `causal`.
double residual_thm42_ode(const ScalarC2& g, double lambda1, Causal causal, double target,
                          double z);

struct CurvatureTarget {
    Quantity quantity = Quantity::K;
    double value = 0.0;
    /// Compare |measured| with |value|.
    bool magnitude_only = false;
};

struct ResidualReport {
    std::size_t n1 = 0;
    std::size_t n2 = 0;
    CurvatureTarget target;
    std::size_t evaluated = 0;
    std::size_t excluded = 0;
    double max_abs = 0.0;
    double mean_abs = 0.0;
    double argmax_u1 = 0.0;
    double argmax_u2 = 0.0;
};

/// Residual of the specialized curvature formula against a target over a grid. Lightlike
/// points are excluded and counted. Throws GridRejected if the grid is invalid or no point
/// can be evaluated.
ResidualReport residual_field(const FactorableSurface& s, const CurvatureTarget& target,
                              const Grid2& grid, std::size_t threads = 1);

}  // namespace pgsurf
