#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace pgsurf {

/// First-order system y' = rhs(t, y) on [t0, t1] with fixed step h.
struct OdeProblem {
    std::function<void(double t, std::span<const double> y, std::span<double> dydt)> rhs;
    double t0 = 0.0;
    double t1 = 1.0;
    std::vector<double> y0;
    double h = 1e-3;
};

struct OdeSolution {
    std::vector<double> t;
    std::vector<std::vector<double>> y;  // y[i] is the state at t[i]
};

/// Classical fixed-step RK4 with dense output at every step. The final step is shortened to
/// land exactly on t1. Throws BlowUp if a state component leaves |y| <= 1e12 or becomes
/// non-finite, InvalidParams on h <= 0 or t1 < t0.
OdeSolution integrate(const OdeProblem& p);

inline constexpr double kBlowUpBound = 1e12;

}  // namespace pgsurf
