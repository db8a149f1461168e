#include "pgsurf/factorable.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "pgsurf/errors.hpp"

namespace pgsurf {

ScalarC2::Sample ScalarC2::at(double t) const {
    if (!(t >= lo && t <= hi)) {
        throw DomainError("argument " + std::to_string(t) + " outside function domain");
    }
    return {value(t), d1(t), d2(t)};
}

ScalarC2 ScalarC2::constant(double c) {
    return {[c](double) { return c; }, [](double) { return 0.0; }, [](double) { return 0.0; }};
}

ScalarC2 ScalarC2::linear(double a, double b) {
    return {[a, b](double t) { return a + b * t; }, [b](double) { return b; },
            [](double) { return 0.0; }};
}

ScalarC2 ScalarC2::polynomial(std::vector<double> coeffs) {
    auto horner = [](const std::vector<double>& c, double t) {
        double acc = 0.0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) {
            acc = acc * t + *it;
        }
        return acc;
    };
    std::vector<double> c1, c2;
    for (std::size_t k = 1; k < coeffs.size(); ++k) {
        c1.push_back(static_cast<double>(k) * coeffs[k]);
    }
    for (std::size_t k = 1; k < c1.size(); ++k) {
        c2.push_back(static_cast<double>(k) * c1[k]);
    }
    return {[=](double t) { return horner(coeffs, t); }, [=](double t) { return horner(c1, t); },
            [=](double t) { return horner(c2, t); }};
}

ScalarC2 ScalarC2::exponential(double scale, double rate) {
    return {[=](double t) { return scale * std::exp(rate * t); },
            [=](double t) { return scale * rate * std::exp(rate * t); },
            [=](double t) { return scale * rate * rate * std::exp(rate * t); }};
}

Vec3 FactorableSurface::position(double u1, double u2) const {
    const double v = f.at(u1).v * g.at(u2).v;
    return kind == Kind::first ? Vec3{u1, u2, v} : Vec3{v, u1, u2};
}

Jet2 FactorableSurface::jet(double u1, double u2) const {
    const auto F = f.at(u1);
    const auto G = g.at(u2);
    const double v = F.v * G.v;
    const double v1 = F.d1 * G.v;
    const double v2 = F.v * G.d1;
    const double v11 = F.d2 * G.v;
    const double v12 = F.d1 * G.d1;
    const double v22 = F.v * G.d2;
    if (kind == Kind::first) {
        return {{u1, u2, v}, {1, 0, v1}, {0, 1, v2}, {0, 0, v11}, {0, 0, v12}, {0, 0, v22}};
    }
    return {{v, u1, u2}, {v1, 1, 0}, {v2, 0, 1}, {v11, 0, 0}, {v12, 0, 0}, {v22, 0, 0}};
}

SurfaceFn FactorableSurface::surface_fn(DerivativeMode mode, double fd_step) const {
    auto self = *this;
    SurfaceFn fn([self](double a, double b) { return self.jet(a, b); },
                 [self](double a, double b) { return self.position(a, b); });
    return fn.with_mode(mode, fd_step);
}

namespace {

void require_kind(const FactorableSurface& s, Kind kind, const char* op) {
    if (s.kind != kind) {
        throw InvalidParams(std::string(op) + ": wrong factorable kind");
    }
}

}  // namespace

double k_first(const FactorableSurface& s, double x, double y) {
    require_kind(s, Kind::first, "k_first");
    const auto F = s.f.at(x);
    const auto G = s.g.at(y);
    const double q = F.v * G.d1;
    const double d = 1.0 - q * q;
    if (std::abs(d) <= kLocusTol * std::max(1.0, q * q)) {
        throw LightlikeLocus("k_first: (f g')^2 = 1");
    }
    const double a = F.d1 * G.d1;
    return (F.v * G.v * F.d2 * G.d2 - a * a) / (d * d);
}

double h_first(const FactorableSurface& s, double x, double y) {
    require_kind(s, Kind::first, "h_first");
    const auto F = s.f.at(x);
    const auto G = s.g.at(y);
    const double q = F.v * G.d1;
    const double d = 1.0 - q * q;
    if (std::abs(d) <= kLocusTol * std::max(1.0, q * q)) {
        throw LightlikeLocus("h_first: (f g')^2 = 1");
    }
    return F.v * G.d2 / (2.0 * std::pow(std::abs(d), 1.5));
}

namespace {

struct SecondKindTerms {
    double p;  // (f g')^2
    double q;  // (f' g)^2
    double d;  // p - q
};

SecondKindTerms second_terms(const ScalarC2::Sample& F, const ScalarC2::Sample& G,
                             const char* op) {
    const double a = F.v * G.d1;
    const double b = F.d1 * G.v;
    SecondKindTerms t{a * a, b * b, a * a - b * b};
    if (!(std::abs(t.d) > kLocusTol * (t.p + t.q))) {
        throw LightlikeLocus(std::string(op) + ": (f g')^2 = (f' g)^2");
    }
    return t;
}

}  // namespace

double k_second(const FactorableSurface& s, double y, double z) {
    require_kind(s, Kind::second, "k_second");
    const auto F = s.f.at(y);
    const auto G = s.g.at(z);
    const auto t = second_terms(F, G, "k_second");
    const double a = F.d1 * G.d1;
    return (F.v * G.v * F.d2 * G.d2 - a * a) / (t.d * t.d);
}

double h_second(const FactorableSurface& s, double y, double z) {
    require_kind(s, Kind::second, "h_second");
    const auto F = s.f.at(y);
    const auto G = s.g.at(z);
    const auto t = second_terms(F, G, "h_second");
    const double a = F.d1 * G.d1;
    const double rhs = t.p * F.d2 * G.v - 2.0 * F.v * G.v * a * a + t.q * F.v * G.d2;
    return rhs / (2.0 * std::pow(std::abs(t.d), 1.5));
}

double k_specialized(const FactorableSurface& s, double u1, double u2) {
    return s.kind == Kind::first ? k_first(s, u1, u2) : k_second(s, u1, u2);
}

double h_specialized(const FactorableSurface& s, double u1, double u2) {
    return s.kind == Kind::first ? h_first(s, u1, u2) : h_second(s, u1, u2);
}

std::optional<int> SignObservation::sign() const {
    if (samples == 0 || !constant()) {
        return std::nullopt;
    }
    return positive > 0 ? 1 : -1;
}

CrossCheckReport cross_check(const FactorableSurface& s, const Grid2& grid) {
    grid.validate();
    constexpr double kNonzero = 1e-12;

    struct PointValues {
        Curvature general;
        double k = 0.0;
        double h = 0.0;
    };
    std::vector<PointValues> values(grid.size());
    for (std::size_t i1 = 0; i1 < grid.n1; ++i1) {
        for (std::size_t i2 = 0; i2 < grid.n2; ++i2) {
            const double u1 = grid.u1(i1);
            const double u2 = grid.u2(i2);
            auto& pv = values[i1 * grid.n2 + i2];
            try {
                pv.general = curvature(s.jet(u1, u2));
                pv.k = k_specialized(s, u1, u2);
                pv.h = h_specialized(s, u1, u2);
            } catch (const LightlikeSurface&) {
                throw GridRejected("cross_check: grid touches a lightlike point");
            } catch (const LightlikeLocus&) {
                throw GridRejected("cross_check: grid touches a lightlike point");
            } catch (const InadmissiblePatch&) {
                throw GridRejected("cross_check: grid touches an inadmissible point");
            }
            if (i2 > 0 && values[i1 * grid.n2 + i2 - 1].general.epsilon != pv.general.epsilon) {
                throw GridRejected("cross_check: grid crosses the lightlike locus");
            }
            if (i1 > 0 && values[(i1 - 1) * grid.n2 + i2].general.epsilon != pv.general.epsilon) {
                throw GridRejected("cross_check: grid crosses the lightlike locus");
            }
        }
    }

    CrossCheckReport rep;
    rep.points = values.size();
    auto observe = [&](SignObservation& obs, double spec, double gen) {
        if (std::abs(spec) > kNonzero && std::abs(gen) > kNonzero) {
            ++obs.samples;
            (spec * gen > 0.0 ? obs.positive : obs.negative)++;
        }
    };
    for (const auto& pv : values) {
        const bool spacelike = pv.general.epsilon > 0;
        (spacelike ? rep.spacelike_points : rep.timelike_points)++;
        observe(spacelike ? rep.k_spacelike : rep.k_timelike, pv.k, pv.general.K);
        observe(spacelike ? rep.h_spacelike : rep.h_timelike, pv.h, pv.general.H);
    }

    auto pick = [&](const SignObservation& obs, int documented) {
        if (auto sg = obs.sign()) {
            if (*sg != documented) {
                rep.matches_documented = false;
            }
            return *sg;
        }
        if (!obs.constant()) {
            rep.matches_documented = false;
        }
        return documented;
    };
    const int sk_s = pick(rep.k_spacelike, kSignK_spacelike);
    const int sk_t = pick(rep.k_timelike, kSignK_timelike);
    const int sh_s = pick(rep.h_spacelike, kSignH);
    const int sh_t = pick(rep.h_timelike, kSignH);
    for (const auto& pv : values) {
        const bool spacelike = pv.general.epsilon > 0;
        rep.max_dk = std::max(rep.max_dk, std::abs(pv.k - (spacelike ? sk_s : sk_t) * pv.general.K));
        rep.max_dh = std::max(rep.max_dh, std::abs(pv.h - (spacelike ? sh_s : sh_t) * pv.general.H));
    }
    return rep;
}

}  // namespace pgsurf
