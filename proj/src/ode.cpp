#include "pgsurf/ode.hpp"

#include <cmath>
#include <string>

#include "pgsurf/errors.hpp"

namespace pgsurf {

namespace {

void check_state(double t, std::span<const double> y) {
    for (double v : y) {
        if (!std::isfinite(v) || std::abs(v) > kBlowUpBound) {
            throw BlowUp("ODE state left |y| <= 1e12 at t = " + std::to_string(t));
        }
    }
}

}  // namespace

OdeSolution integrate(const OdeProblem& p) {
    if (!(p.h > 0.0) || !std::isfinite(p.h)) {
        throw InvalidParams("integrate: step must be positive");
    }
    if (!(p.t1 >= p.t0)) {
        throw InvalidParams("integrate: t1 must not precede t0");
    }
    const std::size_t n = p.y0.size();
    const double span = p.t1 - p.t0;
    auto steps = static_cast<std::size_t>(std::ceil(span / p.h - 1e-9));

    OdeSolution sol;
    sol.t.reserve(steps + 1);
    sol.y.reserve(steps + 1);
    sol.t.push_back(p.t0);
    sol.y.push_back(p.y0);
    check_state(p.t0, p.y0);

    std::vector<double> k1(n), k2(n), k3(n), k4(n), tmp(n);
    std::vector<double> y = p.y0;
    double t = p.t0;
    for (std::size_t s = 0; s < steps; ++s) {
        const double h = (s + 1 == steps) ? p.t1 - t : p.h;
        p.rhs(t, y, k1);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
        p.rhs(t + 0.5 * h, tmp, k2);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
        p.rhs(t + 0.5 * h, tmp, k3);
        for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + h * k3[i];
        p.rhs(t + h, tmp, k4);
        for (std::size_t i = 0; i < n; ++i) {
            y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
        t = (s + 1 == steps) ? p.t1 : p.t0 + static_cast<double>(s + 1) * p.h;
        check_state(t, y);
        sol.t.push_back(t);
        sol.y.push_back(y);
    }
    return sol;
}

}  // namespace pgsurf
