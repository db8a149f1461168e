#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pgsurf/factorable.hpp"

namespace pgsurf {

/// Search space for the second-kind constant-K probe.
///   polynomial:      f(y) = sum_{k<=d} a_k y^k
///   exp_polynomial:  f(y) = sum_{k<=d} a_k y^k + a_{d+1} exp(a_{d+2} y)
/// and the same form for g(z) with its own coefficients.
enum class Ansatz { polynomial, exp_polynomial };

struct ProbeConfig {
    double K0 = 1.0;
    Ansatz ansatz = Ansatz::polynomial;
    int degree = 2;  // 0..4
    std::size_t budget = 10000;  // objective evaluations across all restarts
    std::size_t restarts = 8;
    Grid2 grid{0.0, 1.0, 0.0, 1.0, 9, 9};
    std::uint64_t seed = 20240601;
    double init_scale = 1.0;
    std::size_t threads = 1;
};

struct ProbeReport {
    /// One-line statement of the searched family, grid and budget.
    std::string scope;
    double K0 = 0.0;
    double best_residual = 0.0;
    double initial_residual = 0.0;
    std::vector<double> best_params;
    std::size_t evaluations = 0;
    std::size_t best_restart = 0;
};

std::size_t ansatz_param_count(Ansatz a, int degree);

/// Builds x = f(y) g(z) from a parameter vector (f coefficients first, then g).
FactorableSurface ansatz_surface(Ansatz a, int degree, std::span<const double> params);

/// Objective value returned when some grid point is lightlike or not finite.
inline constexpr double kProbePenalty = 1e6;

/// max over the grid of |k_second - K0|.
double probe_objective(const ProbeConfig& cfg, std::span<const double> params);

/// Derivative-free coordinate search with restarts minimizing probe_objective. Restarts are
/// independent and reduced by minimum (ties broken by restart index), so the result does
/// not depend on cfg.threads. This is a bounded search, not a proof.
ProbeReport nonexistence_probe(const ProbeConfig& cfg);

}  // namespace pgsurf
