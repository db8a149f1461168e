#include "pgsurf/reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pgsurf/errors.hpp"

namespace pgsurf {

namespace {

constexpr double kBranchTol = 1e-12;

void require_branch(Causal causal) {
    if (causal == Causal::lightlike) {
        throw InvalidParams("reconstruct: causal branch must be spacelike or timelike");
    }
}

ReconstructionReport compare(std::string family, const OdeSolution& sol, std::size_t component,
                             const std::function<double(double)>& closed, double h) {
    ReconstructionReport rep;
    rep.family = std::move(family);
    rep.h = h;
    rep.t0 = sol.t.front();
    rep.t1 = sol.t.back();
    rep.steps = sol.t.size() - 1;
    rep.t = sol.t;
    rep.numeric.reserve(sol.t.size());
    rep.closed.reserve(sol.t.size());
    for (std::size_t i = 0; i < sol.t.size(); ++i) {
        const double num = sol.y[i][component];
        const double ref = closed(sol.t[i]);
        const double err = std::abs(num - ref);
        rep.numeric.push_back(num);
        rep.closed.push_back(ref);
        rep.max_error = std::max(rep.max_error, err);
        rep.max_relative_error =
            std::max(rep.max_relative_error, err / std::max(std::abs(ref), 1e-300));
    }
    return rep;
}

}  // namespace

ReconstructionReport reconstruct_thm31(const Thm31Problem& p) {
    if (p.K0 == 0.0 || p.g0 == 0.0) {
        throw InvalidParams("reconstruct_thm31: K0 and g0 must be non-zero");
    }
    const double k = std::sqrt(std::abs(p.K0));
    const double sg = p.sign >= 0 ? 1.0 : -1.0;
    const double g0 = p.g0;
    OdeProblem ode;
    ode.rhs = [=](double, std::span<const double> y, std::span<double> dy) {
        const double gf = g0 * y[0];
        dy[0] = sg * k * (1.0 - gf * gf) / g0;
    };
    ode.t0 = 0.0;
    ode.t1 = p.x1;
    ode.h = p.h;
    ode.y0 = {sg * std::tanh(p.lambda1) / g0};
    const auto sol = integrate(ode);
    const double l1 = p.lambda1;
    return compare("thm31", sol, 0,
                   [=](double x) { return sg * std::tanh(k * x + l1) / g0; }, p.h);
}

Thm32Problem thm32_problem(double H0, double f0, double lambda, Causal causal, double y0,
                           double length, double h) {
    Thm32ClosedForm cf{H0, f0, lambda, 0.0, causal};
    Thm32Problem p;
    p.H0 = H0;
    p.f0 = f0;
    p.causal = causal;
    p.y0 = y0;
    p.g_init = cf.value(y0);
    p.slope_init = cf.slope(y0);
    p.length = length;
    p.h = h;
    return p;
}

double Thm32ClosedForm::value(double y) const {
    const double s = 2 * H0 * y + lambda;
    if (causal == Causal::spacelike) {
        return std::sqrt(s * s + 1) / (2 * f0 * H0) + c;
    }
    return -std::sqrt(s * s - 1) / (2 * f0 * H0) + c;
}

double Thm32ClosedForm::slope(double y) const {
    const double s = 2 * H0 * y + lambda;
    if (causal == Causal::spacelike) {
        return s / (f0 * std::sqrt(s * s + 1));
    }
    return -s / (f0 * std::sqrt(s * s - 1));
}

double Thm32ClosedForm::second(double y) const {
    const double s = 2 * H0 * y + lambda;
    const double rad = causal == Causal::spacelike ? s * s + 1 : s * s - 1;
    return 2 * H0 / (f0 * rad * std::sqrt(rad));
}

Thm32ClosedForm thm32_closed_form(const Thm32Problem& p) {
    if (p.H0 == 0.0 || p.f0 == 0.0) {
        throw InvalidParams("reconstruct_thm32: H0 and f0 must be non-zero");
    }
    require_branch(p.causal);
    const double v0 = p.f0 * p.slope_init;
    const double gap = 1.0 - v0 * v0;
    if (std::abs(gap) <= kBranchTol) {
        throw BranchViolation("reconstruct_thm32: initial slope on (f0 g')^2 = 1");
    }
    const bool spacelike = p.causal == Causal::spacelike;
    if (spacelike != (gap > 0.0)) {
        throw BranchViolation(std::string("reconstruct_thm32: initial slope not on the ") +
                              std::string(to_string(p.causal)) + " branch");
    }
    Thm32ClosedForm cf;
    cf.H0 = p.H0;
    cf.f0 = p.f0;
    cf.causal = p.causal;
    const double s0 = spacelike ? v0 / std::sqrt(gap) : -v0 / std::sqrt(-gap);
    cf.lambda = s0 - 2 * p.H0 * p.y0;
    if (!spacelike) {
        const double s1 = s0 + 2 * p.H0 * p.length;
        if (s0 * s1 <= 0.0 || std::abs(s1) <= 1.0) {
            throw BranchViolation("reconstruct_thm32: corridor reaches (f0 g')^2 = 1");
        }
    }
    cf.c = 0.0;
    cf.c = p.g_init - cf.value(p.y0);
    return cf;
}

ReconstructionReport reconstruct_thm32(const Thm32Problem& p) {
    const Thm32ClosedForm cf = thm32_closed_form(p);
    const double twoH = 2 * p.H0;
    const double f0 = p.f0;
    const bool spacelike = p.causal == Causal::spacelike;
    OdeProblem ode;
    ode.rhs = [=](double, std::span<const double> y, std::span<double> dy) {
        const double v = f0 * y[1];
        const double rad = spacelike ? 1.0 - v * v : v * v - 1.0;
        if (!(rad > 0.0)) {
            throw BranchViolation("reconstruct_thm32: integration crossed (f0 g')^2 = 1");
        }
        dy[0] = y[1];
        dy[1] = twoH * rad * std::sqrt(rad) / f0;
    };
    ode.t0 = p.y0;
    ode.t1 = p.y0 + p.length;
    ode.h = p.h;
    ode.y0 = {p.g_init, p.slope_init};
    const auto sol = integrate(ode);
    auto rep = compare("thm32", sol, 0, [&](double y) { return cf.value(y); }, p.h);
    rep.note = std::string(to_string(p.causal)) + " branch, lambda = " + std::to_string(cf.lambda);
    return rep;
}

double Thm42ClosedForm::w(double z) const {
    const double s = 2 * H0 * z + lambda2;
    const double c = causal == Causal::spacelike ? -1.0 : 1.0;
    return kappa * s / std::sqrt(s * s + c);
}

double Thm42ClosedForm::w_prime(double z) const {
    const double s = 2 * H0 * z + lambda2;
    const double c = causal == Causal::spacelike ? -1.0 : 1.0;
    const double rad = s * s + c;
    return kappa * 2 * H0 * c / (rad * std::sqrt(rad));
}

double Thm42ClosedForm::g(double z) const {
    const double s = 2 * H0 * z + lambda2;
    const double c = causal == Causal::spacelike ? -1.0 : 1.0;
    return lambda3 * std::exp(kappa / (2 * H0) * std::sqrt(s * s + c));
}

Thm42ClosedForm thm42_closed_form(const Thm42Problem& p) {
    if (p.H0 == 0.0 || p.lambda1 == 0.0 || p.lambda3 == 0.0) {
        throw InvalidParams("reconstruct_thm42: H0, lambda1 and lambda3 must be non-zero");
    }
    require_branch(p.causal);
    const bool spacelike = p.causal == Causal::spacelike;
    const double l2sq = p.lambda1 * p.lambda1;
    Thm42ClosedForm cf;
    cf.H0 = p.H0;
    cf.lambda1 = p.lambda1;
    cf.lambda3 = p.lambda3;
    cf.causal = p.causal;
    cf.kappa = spacelike ? -std::abs(p.lambda1) : std::abs(p.lambda1);
    cf.lambda2 = p.lambda2;
    if (p.w_init) {
        const double w0 = *p.w_init;
        const double gap = w0 * w0 - l2sq;
        if (std::abs(gap) <= kBranchTol * l2sq) {
            throw BranchViolation("reconstruct_thm42: initial w on (g'/g)^2 = lambda1^2");
        }
        if (spacelike != (gap > 0.0)) {
            throw BranchViolation(std::string("reconstruct_thm42: initial w not on the ") +
                                  std::string(to_string(p.causal)) + " branch");
        }
        const double s0 = spacelike ? -w0 / std::sqrt(gap) : w0 / std::sqrt(-gap);
        cf.lambda2 = s0 - 2 * p.H0 * p.z0;
    }
    if (spacelike) {
        const double s0 = 2 * p.H0 * p.z0 + cf.lambda2;
        const double s1 = s0 + 2 * p.H0 * p.length;
        if (s0 * s1 <= 0.0 || std::abs(s0) <= 1.0 || std::abs(s1) <= 1.0) {
            throw BranchViolation("reconstruct_thm42: corridor leaves (2 H0 z + lambda2)^2 > 1");
        }
    }
    return cf;
}

ReconstructionReport reconstruct_thm42(const Thm42Problem& p) {
    const Thm42ClosedForm cf = thm42_closed_form(p);
    const double twoH = 2 * p.H0;
    const double l2sq = p.lambda1 * p.lambda1;
    const bool spacelike = p.causal == Causal::spacelike;
    OdeProblem ode;
    ode.rhs = [=](double, std::span<const double> y, std::span<double> dy) {
        const double rad = spacelike ? y[0] * y[0] - l2sq : l2sq - y[0] * y[0];
        if (!(rad > 0.0)) {
            throw BranchViolation("reconstruct_thm42: integration crossed (g'/g)^2 = lambda1^2");
        }
        dy[0] = twoH * rad * std::sqrt(rad) / l2sq;
        dy[1] = y[0] * y[1];
    };
    ode.t0 = p.z0;
    ode.t1 = p.z0 + p.length;
    ode.h = p.h;
    ode.y0 = {cf.w(p.z0), cf.g(p.z0)};
    const auto sol = integrate(ode);
    auto rep = compare("thm42", sol, 1, [&](double z) { return cf.g(z); }, p.h);
    rep.note = std::string(to_string(p.causal)) + " branch, exponent coefficient " +
               std::to_string(cf.kappa) + "/(2 H0)";
    if (cf.kappa != p.lambda1) {
        rep.note += "; lambda1 sign flipped to solve the ODE for the prescribed H0";
    }
    return rep;
}

double residual_thm31_ode(const ScalarC2& f, double g0, double target, double x) {
    const auto F = f.at(x);
    const double gf = g0 * F.v;
    return g0 * F.d1 / (1.0 - gf * gf) - target;
}

double residual_thm32_ode(const ScalarC2& g, double f0, Causal causal, double target, double y) {
    require_branch(causal);
    const auto G = g.at(y);
    const double v = f0 * G.d1;
    const double rad = causal == Causal::spacelike ? 1.0 - v * v : v * v - 1.0;
    if (!(rad > 0.0)) {
        throw BranchViolation("residual_thm32_ode: point not on the requested branch");
    }
    return f0 * G.d2 / (rad * std::sqrt(rad)) - target;
}

double residual_thm42_ode(const ScalarC2& g, double lambda1, Causal causal, double target,
                          double z) {
    require_branch(causal);
    const auto G = g.at(z);
    const double w = G.d1 / G.v;
    const double wp = (G.d2 * G.v - G.d1 * G.d1) / (G.v * G.v);
    const double l2sq = lambda1 * lambda1;
    const double rad = causal == Causal::spacelike ? w * w - l2sq : l2sq - w * w;
    if (!(rad > 0.0)) {
        throw BranchViolation("residual_thm42_ode: point not on the requested branch");
    }
    return l2sq * wp / (rad * std::sqrt(rad)) - target;
}

ResidualReport residual_field(const FactorableSurface& s, const CurvatureTarget& target,
                              const Grid2& grid, std::size_t threads) {
    grid.validate();
    struct Slot {
        bool ok = false;
        double r = 0.0;
    };
    std::vector<Slot> slots(grid.size());
    parallel_for(
        grid.size(),
        [&](std::size_t idx) {
            const double u1 = grid.u1(idx / grid.n2);
            const double u2 = grid.u2(idx % grid.n2);
            try {
                const double m = target.quantity == Quantity::K ? k_specialized(s, u1, u2)
                                                                : h_specialized(s, u1, u2);
                slots[idx].r = target.magnitude_only ? std::abs(m) - std::abs(target.value)
                                                     : m - target.value;
                slots[idx].ok = std::isfinite(slots[idx].r);
            } catch (const LightlikeLocus&) {
            } catch (const DomainError&) {
            }
        },
        threads);

    ResidualReport rep;
    rep.n1 = grid.n1;
    rep.n2 = grid.n2;
    rep.target = target;
    double sum = 0.0;
    for (std::size_t idx = 0; idx < slots.size(); ++idx) {
        if (!slots[idx].ok) {
            ++rep.excluded;
            continue;
        }
        ++rep.evaluated;
        const double a = std::abs(slots[idx].r);
        sum += a;
        if (rep.evaluated == 1 || a > rep.max_abs) {
            rep.max_abs = a;
            rep.argmax_u1 = grid.u1(idx / grid.n2);
            rep.argmax_u2 = grid.u2(idx % grid.n2);
        }
    }
    if (rep.evaluated == 0) {
        throw GridRejected("residual_field: no evaluable grid point");
    }
    rep.mean_abs = sum / static_cast<double>(rep.evaluated);
    return rep;
}

}  // namespace pgsurf
