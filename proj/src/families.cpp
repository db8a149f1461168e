#include "pgsurf/families.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "pgsurf/errors.hpp"

namespace pgsurf {

namespace {

constexpr double kMargin = 1.05;

double sgn(double v) { return v < 0.0 ? -1.0 : 1.0; }

void require_causal(Causal c) {
    if (c == Causal::lightlike) {
        throw InvalidParams("family causal character must be spacelike or timelike");
    }
}

/// Range of t for which a + b t lies in [s_lo, s_hi] (b != 0).
std::pair<double, double> preimage(double s_lo, double s_hi, double a, double b) {
    const double t0 = (s_lo - a) / b;
    const double t1 = (s_hi - a) / b;
    return {std::min(t0, t1), std::max(t0, t1)};
}

/// r(s) = sqrt(s^2 + c) for c = +-1, throwing DomainError when the radicand is not positive.
double root(double s, double c) {
    const double rad = s * s + c;
    if (!(rad > 0.0)) {
        throw DomainError("radicand (s^2 - 1) not positive");
    }
    return std::sqrt(rad);
}

}  // namespace

Family thm31_family(const FamilyParams& p) {
    if (p.K0 == 0.0 || !std::isfinite(p.K0)) {
        throw InvalidParams("thm31: K0 must be non-zero");
    }
    if (p.g_exponent_scale != 1.0) {
        throw InvalidParams("thm31: g_exponent_scale applies to thm42 only");
    }
    const double k = std::sqrt(std::abs(p.K0));
    const double l1 = p.lambda1;
    const double sg = p.sign >= 0 ? 1.0 : -1.0;
    ScalarC2 f{[=](double x) { return sg * std::tanh(k * x + l1); },
               [=](double x) {
                   const double c = 1.0 / std::cosh(k * x + l1);
                   return sg * k * c * c;
               },
               [=](double x) {
                   const double c = 1.0 / std::cosh(k * x + l1);
                   return -2.0 * sg * k * k * c * c * std::tanh(k * x + l1);
               }};
    Family fam;
    fam.name = "thm31";
    fam.surface = {Kind::first, std::move(f), ScalarC2::linear(p.lambda2, 1.0)};
    fam.quantity = Quantity::K;
    fam.prescribed = p.K0;
    fam.attained = -std::abs(p.K0);
    fam.causal = Causal::spacelike;
    fam.domain = {-1.0, 1.0, -1.0, 1.0, 50, 50};
    return fam;
}

Family thm32_family(const FamilyParams& p) {
    if (p.H0 == 0.0 || !std::isfinite(p.H0)) {
        throw InvalidParams("thm32: H0 must be non-zero");
    }
    if (p.f0 == 0.0) {
        throw InvalidParams("thm32: f0 must be non-zero");
    }
    if (p.g_exponent_scale != 1.0) {
        throw InvalidParams("thm32: g_exponent_scale applies to thm42 only");
    }
    require_causal(p.causal);
    const double H0 = p.H0;
    const double l1 = p.lambda1;
    const double l2 = p.lambda2;
    const double f0 = p.f0;
    const double c = p.causal == Causal::spacelike ? 1.0 : -1.0;
    // z(y) = root(s)/(2 H0) + l2, z' = s / root(s), z'' = 2 H0 c / root(s)^3
    ScalarC2 g{[=](double y) { return (root(2 * H0 * y + l1, c) / (2 * H0) + l2) / f0; },
               [=](double y) {
                   const double s = 2 * H0 * y + l1;
                   return s / root(s, c) / f0;
               },
               [=](double y) {
                   const double r = root(2 * H0 * y + l1, c);
                   return 2 * H0 * c / (r * r * r) / f0;
               }};
    Family fam;
    fam.name = "thm32";
    fam.surface = {Kind::first, ScalarC2::constant(f0), std::move(g)};
    fam.quantity = Quantity::H;
    fam.prescribed = H0;
    fam.attained = c * H0;
    fam.causal = p.causal;
    const auto [ylo, yhi] = p.causal == Causal::spacelike ? std::pair{-1.0, 1.0}
                                                          : preimage(kMargin, 3.0, l1, 2 * H0);
    fam.domain = {-1.0, 1.0, ylo, yhi, 50, 50};
    return fam;
}

Family thm42_family(const FamilyParams& p) {
    if (p.H0 == 0.0 || !std::isfinite(p.H0)) {
        throw InvalidParams("thm42: H0 must be non-zero");
    }
    if (p.lambda1 == 0.0 || p.lambda2 == 0.0) {
        throw InvalidParams("thm42: lambda1 and lambda2 must be non-zero");
    }
    require_causal(p.causal);
    const double H0 = p.H0;
    const double l2 = p.lambda2;
    const double l3 = p.lambda3;
    const double c = p.causal == Causal::spacelike ? -1.0 : 1.0;
    // g = exp(phi), phi = a root(s), phi' = a 2H0 s / root, phi'' = a (2H0)^2 c / root^3
    const double a = p.g_exponent_scale * l2 / (2 * H0);
    ScalarC2 g{[=](double z) { return std::exp(a * root(2 * H0 * z + l3, c)); },
               [=](double z) {
                   const double s = 2 * H0 * z + l3;
                   const double r = root(s, c);
                   return std::exp(a * r) * a * 2 * H0 * s / r;
               },
               [=](double z) {
                   const double s = 2 * H0 * z + l3;
                   const double r = root(s, c);
                   const double d1 = a * 2 * H0 * s / r;
                   const double d2 = a * 4 * H0 * H0 * c / (r * r * r);
                   return std::exp(a * r) * (d2 + d1 * d1);
               }};
    Family fam;
    fam.name = "thm42";
    fam.surface = {Kind::second, ScalarC2::exponential(p.lambda1, l2), std::move(g)};
    fam.quantity = Quantity::H;
    fam.prescribed = H0;
    fam.attained = c * sgn(p.lambda1) * sgn(l2) * H0;
    fam.causal = p.causal;
    const auto [zlo, zhi] = p.causal == Causal::spacelike ? preimage(kMargin, 2.5, l3, 2 * H0)
                                                          : preimage(-1.5, 1.5, l3, 2 * H0);
    fam.domain = {-1.0, 1.0, zlo, zhi, 50, 50};
    return fam;
}

std::vector<Fixture> fixtures_flat_minimal() {
    std::vector<Fixture> out;
    out.push_back({"plane", {Kind::first, ScalarC2::constant(0.0), ScalarC2::constant(1.0)},
                   0.0, 0.0, false, {-1, 1, -1, 1, 20, 20}});
    out.push_back({"linear", {Kind::first, ScalarC2::constant(2.0), ScalarC2::linear(3.0, 1.0)},
                   0.0, 0.0, false, {-1, 1, -1, 1, 20, 20}});
    // K is not constant on the saddle (-1/(1 - x^2)^2 in the specialized convention).
    out.push_back({"saddle", {Kind::first, ScalarC2::linear(0.0, 1.0), ScalarC2::linear(0.0, 1.0)},
                   std::nullopt, 0.0, false, {-0.5, 0.5, -0.5, 0.5, 20, 20}});
    out.push_back({"expexp",
                   {Kind::second, ScalarC2::exponential(1.0, 1.0), ScalarC2::exponential(1.0, 1.0)},
                   0.0, std::nullopt, true, {-1, 1, -1, 1, 20, 20}});
    out.push_back({"expexp2",
                   {Kind::second, ScalarC2::exponential(1.0, 1.0), ScalarC2::exponential(1.0, 2.0)},
                   0.0, std::nullopt, false, {-1, 1, -1, 1, 20, 20}});
    return out;
}

Family make_family(const std::string& name, const FamilyParams& p) {
    if (name == "thm31") return thm31_family(p);
    if (name == "thm32") return thm32_family(p);
    if (name == "thm42") return thm42_family(p);
    throw InvalidParams("unknown family '" + name + "'");
}

std::optional<Fixture> find_fixture(const std::string& name) {
    for (auto& fx : fixtures_flat_minimal()) {
        if (fx.name == name) {
            return fx;
        }
    }
    return std::nullopt;
}

}  // namespace pgsurf
