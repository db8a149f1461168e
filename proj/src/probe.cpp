#include "pgsurf/probe.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "pgsurf/errors.hpp"

namespace pgsurf {

namespace {

ScalarC2 ansatz_function(Ansatz a, int degree, std::span<const double> c) {
    std::vector<double> poly(c.begin(), c.begin() + degree + 1);
    ScalarC2 p = ScalarC2::polynomial(poly);
    if (a == Ansatz::polynomial) {
        return p;
    }
    ScalarC2 e = ScalarC2::exponential(c[degree + 1], c[degree + 2]);
    return {[p, e](double t) { return p.value(t) + e.value(t); },
            [p, e](double t) { return p.d1(t) + e.d1(t); },
            [p, e](double t) { return p.d2(t) + e.d2(t); }};
}

struct RestartResult {
    double best = kProbePenalty;
    double initial = kProbePenalty;
    std::vector<double> params;
    std::size_t evaluations = 0;
};

RestartResult run_restart(const ProbeConfig& cfg, std::size_t restart, std::size_t budget) {
    const std::size_t n = ansatz_param_count(cfg.ansatz, cfg.degree);
    std::mt19937_64 rng(cfg.seed + 0x9E3779B97F4A7C15ULL * (restart + 1));
    std::uniform_real_distribution<double> dist(-cfg.init_scale, cfg.init_scale);
    RestartResult r;
    r.params.resize(n);
    for (auto& v : r.params) {
        v = dist(rng);
    }
    r.best = probe_objective(cfg, r.params);
    r.initial = r.best;

    double step = 0.5 * cfg.init_scale;
    while (r.evaluations < budget && step > 1e-13) {
        bool improved = false;
        for (std::size_t i = 0; i < n && r.evaluations < budget; ++i) {
            for (double dir : {1.0, -1.0}) {
                if (r.evaluations >= budget) {
                    break;
                }
                const double keep = r.params[i];
                r.params[i] = keep + dir * step;
                const double val = probe_objective(cfg, r.params);
                ++r.evaluations;
                if (val < r.best) {
                    r.best = val;
                    improved = true;
                    break;
                }
                r.params[i] = keep;
            }
        }
        if (!improved) {
            step *= 0.5;
        }
    }
    return r;
}

}  // namespace

std::size_t ansatz_param_count(Ansatz a, int degree) {
    const std::size_t per = static_cast<std::size_t>(degree) + (a == Ansatz::polynomial ? 1 : 3);
    return 2 * per;
}

FactorableSurface ansatz_surface(Ansatz a, int degree, std::span<const double> params) {
    if (degree < 0 || degree > 4) {
        throw InvalidParams("probe: degree must be in [0, 4]");
    }
    const std::size_t total = ansatz_param_count(a, degree);
    if (params.size() != total) {
        throw InvalidParams("probe: wrong parameter count");
    }
    const std::size_t per = total / 2;
    return {Kind::second, ansatz_function(a, degree, params.first(per)),
            ansatz_function(a, degree, params.subspan(per))};
}

double probe_objective(const ProbeConfig& cfg, std::span<const double> params) {
    const FactorableSurface s = ansatz_surface(cfg.ansatz, cfg.degree, params);
    double worst = 0.0;
    for (std::size_t i1 = 0; i1 < cfg.grid.n1; ++i1) {
        for (std::size_t i2 = 0; i2 < cfg.grid.n2; ++i2) {
            double k = 0.0;
            try {
                k = k_second(s, cfg.grid.u1(i1), cfg.grid.u2(i2));
            } catch (const LightlikeLocus&) {
                return kProbePenalty;
            }
            const double r = std::abs(k - cfg.K0);
            if (!std::isfinite(r)) {
                return kProbePenalty;
            }
            worst = std::max(worst, r);
        }
    }
    return std::min(worst, kProbePenalty);
}

ProbeReport nonexistence_probe(const ProbeConfig& cfg) {
    cfg.grid.validate();
    if (cfg.degree < 0 || cfg.degree > 4) {
        throw InvalidParams("probe: degree must be in [0, 4]");
    }
    const std::size_t restarts = std::max<std::size_t>(cfg.restarts, 1);
    std::vector<RestartResult> results(restarts);
    parallel_for(
        restarts,
        [&](std::size_t r) {
            const std::size_t share =
                cfg.budget / restarts + (r < cfg.budget % restarts ? 1 : 0);
            results[r] = run_restart(cfg, r, share);
        },
        cfg.threads);

    ProbeReport rep;
    rep.K0 = cfg.K0;
    rep.best_residual = results[0].best;
    rep.initial_residual = results[0].initial;
    rep.best_params = results[0].params;
    for (std::size_t r = 0; r < restarts; ++r) {
        rep.evaluations += results[r].evaluations;
        rep.initial_residual = std::min(rep.initial_residual, results[r].initial);
        if (results[r].best < rep.best_residual) {
            rep.best_residual = results[r].best;
            rep.best_params = results[r].params;
            rep.best_restart = r;
        }
    }
    std::ostringstream scope;
    scope << "x = f(y) g(z), " << (cfg.ansatz == Ansatz::polynomial ? "polynomial" : "exp-polynomial")
          << " f, g of degree " << cfg.degree << "; grid [" << cfg.grid.u1_lo << ", "
          << cfg.grid.u1_hi << "] x [" << cfg.grid.u2_lo << ", " << cfg.grid.u2_hi << "] at "
          << cfg.grid.n1 << "x" << cfg.grid.n2 << "; budget " << cfg.budget << " evaluations over "
          << restarts << " restarts; objective max |K - K0|";
    rep.scope = scope.str();
    return rep;
}

}  // namespace pgsurf
