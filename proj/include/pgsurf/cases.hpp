#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "pgsurf/factorable.hpp"

namespace pgsurf {

/// One coefficient of a polynomial identity, as a function of the free variable of the case
/// (f, g, z, ...). Constant coefficients ignore their argument.
struct NamedCoefficient {
    std::string name;
    std::function<double(double)> eval;
};

struct CaseCoefficients {
    std::string identity;
    std::vector<NamedCoefficient> coefficients;
};

struct CoefficientStat {
    std::string name;
    double max_abs = 0.0;
    double at = 0.0;  // sample where max_abs was attained
};

struct CaseReport {
    std::string identity;
    std::vector<CoefficientStat> coefficients;
    double tolerance = 0.0;
    /// Every coefficient vanishes on every sample.
    bool all_vanish = true;
    /// The identity cannot hold identically for the given witness.
    bool inconsistent() const { return !all_vanish; }
};

/// A polynomial identity holds for all values of its variable only if each coefficient
/// vanishes; this evaluates every coefficient over the samples and reports which do not.
CaseReport case_contradiction(const CaseCoefficients& c, std::span<const double> samples,
                              double tolerance = 1e-9);

/// -(1/(f f''))' + (f^3/f'')' (g')^4 = 0 (first kind, f'' != 0, g'' != 0).
/// Coefficients c0 = -(1/(f f''))' and c4 = (f^3/f'')' as functions of x; the outer
/// derivative is a central difference of the analytic inner expressions.
CaseCoefficients coefficients_first_kind_k(const ScalarC2& f, double fd_step = 1e-5);

/// Second-kind K0 identity with f linear (f' = f0), expanded as a polynomial in f:
///   K0 g'^4 f^4 - 2 K0 (f0 g g')^2 f^2 + K0 (f0 g)^4 + (f0 g')^2 = 0.
/// Coefficients are functions of z.
CaseCoefficients coefficients_second_kind_linear_f(double K0, double f0, const ScalarC2& g);

/// (l4 - l1 l4^2) g^5 + 2 (l5 - l1 l4 l5) g^3 - (l1 l5^2) g = 0.
CaseCoefficients coefficients_quintic(double lambda1, double lambda4, double lambda5);

/// Relations forced on (lambda4, lambda5) by the quintic identity for lambda1 != 0, given
/// that lambda4 and lambda5 do not both vanish.
struct QuinticSolution {
    double lambda1_lambda4 = 0.0;  // always exactly 1
    double lambda4 = 0.0;          // 1 / lambda1
    double lambda5 = 0.0;          // always exactly 0
};

/// Throws InvalidParams for lambda1 = 0.
QuinticSolution solve_quintic(double lambda1);

}  // namespace pgsurf
