#include "pgsurf/cases.hpp"

#include <cmath>

#include "pgsurf/errors.hpp"

namespace pgsurf {

CaseReport case_contradiction(const CaseCoefficients& c, std::span<const double> samples,
                              double tolerance) {
    CaseReport rep;
    rep.identity = c.identity;
    rep.tolerance = tolerance;
    for (const auto& coef : c.coefficients) {
        CoefficientStat st{coef.name};
        for (double t : samples) {
            const double v = std::abs(coef.eval(t));
            if (!(v <= st.max_abs)) {
                st.max_abs = v;
                st.at = t;
            }
        }
        if (!(st.max_abs <= tolerance)) {
            rep.all_vanish = false;
        }
        rep.coefficients.push_back(std::move(st));
    }
    return rep;
}

CaseCoefficients coefficients_first_kind_k(const ScalarC2& f, double fd_step) {
    auto inv_ffpp = [f](double x) {
        const auto F = f.at(x);
        return 1.0 / (F.v * F.d2);
    };
    auto f3_over_fpp = [f](double x) {
        const auto F = f.at(x);
        return F.v * F.v * F.v / F.d2;
    };
    auto ddx = [fd_step](std::function<double(double)> q) {
        return [q = std::move(q), fd_step](double x) {
            const double h = fd_step * std::max(1.0, std::abs(x));
            return (q(x + h) - q(x - h)) / (2.0 * h);
        };
    };
    auto d_inv = ddx(inv_ffpp);
    return {"-(1/(f f''))' + (f^3/f'')' (g')^4 = 0",
            {{"c0 = -(1/(f f''))'", [d_inv](double x) { return -d_inv(x); }},
             {"c4 = (f^3/f'')'", ddx(f3_over_fpp)}}};
}

CaseCoefficients coefficients_second_kind_linear_f(double K0, double f0, const ScalarC2& g) {
    return {"K0 g'^4 f^4 - 2 K0 (f0 g g')^2 f^2 + K0 (f0 g)^4 + (f0 g')^2 = 0",
            {{"f^4: K0 g'^4",
              [=](double z) {
                  const double gp = g.at(z).d1;
                  return K0 * gp * gp * gp * gp;
              }},
             {"f^2: -2 K0 (f0 g g')^2",
              [=](double z) {
                  const auto G = g.at(z);
                  const double a = f0 * G.v * G.d1;
                  return -2.0 * K0 * a * a;
              }},
             {"f^0: K0 (f0 g)^4 + (f0 g')^2",
              [=](double z) {
                  const auto G = g.at(z);
                  const double a = f0 * G.v;
                  const double b = f0 * G.d1;
                  return K0 * a * a * a * a + b * b;
              }}}};
}

CaseCoefficients coefficients_quintic(double l1, double l4, double l5) {
    return {"(l4 - l1 l4^2) g^5 + 2 (l5 - l1 l4 l5) g^3 - (l1 l5^2) g = 0",
            {{"g^5", [=](double) { return l4 - l1 * l4 * l4; }},
             {"g^3", [=](double) { return 2.0 * (l5 - l1 * l4 * l5); }},
             {"g^1", [=](double) { return -l1 * l5 * l5; }}}};
}

QuinticSolution solve_quintic(double lambda1) {
    if (lambda1 == 0.0 || !std::isfinite(lambda1)) {
        throw InvalidParams("solve_quintic: lambda1 must be non-zero");
    }
    // g^1: l1 l5^2 = 0 forces l5 = 0. Then g^3 vanishes and g^5 reads l4 (1 - l1 l4) = 0;
    // l4 = 0 together with l5 = 0 is excluded, leaving l1 l4 = 1.
    QuinticSolution s;
    s.lambda5 = 0.0;
    s.lambda1_lambda4 = 1.0;
    s.lambda4 = 1.0 / lambda1;
    return s;
}

}  // namespace pgsurf
