#include <cmath>

#include "doctest.h"
#include "pgsurf/errors.hpp"
#include "pgsurf/factorable.hpp"
#include "pgsurf/families.hpp"
#include "random.hpp"

using namespace pgsurf;

namespace {

ScalarC2 tanh_fn() {
    return {[](double t) { return std::tanh(t); },
            [](double t) { return 1.0 / (std::cosh(t) * std::cosh(t)); },
            [](double t) {
                const double c = std::cosh(t);
                return -2.0 * std::tanh(t) / (c * c);
            }};
}

ScalarC2 sin_fn(double a, double b) {
    return {[a, b](double t) { return a * std::sin(b * t); },
            [a, b](double t) { return a * b * std::cos(b * t); },
            [a, b](double t) { return -a * b * b * std::sin(b * t); }};
}

// Specialized K from the finite-difference general pipeline.
double fd_k(const FactorableSurface& s, double u1, double u2) {
    const Curvature c = curvature(s.surface_fn(DerivativeMode::finite_difference).jet(u1, u2));
    return k_in_factorable_convention(c);
}

}  // namespace

TEST_CASE("ScalarC2 builders and domain") {
    const ScalarC2 p = ScalarC2::polynomial({1, 2, 3});
    const auto s = p.at(2.0);
    CHECK(s.v == 17.0);
    CHECK(s.d1 == 14.0);
    CHECK(s.d2 == 6.0);
    const auto e = ScalarC2::exponential(2.0, 3.0).at(0.5);
    CHECK(e.v == doctest::Approx(2 * std::exp(1.5)));
    CHECK(e.d2 == doctest::Approx(18 * std::exp(1.5)));
    ScalarC2 bounded = ScalarC2::linear(0, 1);
    bounded.lo = 0.0;
    bounded.hi = 1.0;
    CHECK_THROWS_AS(bounded.at(1.5), DomainError);
    CHECK(bounded.at(1.0).v == 1.0);
}

TEST_CASE("k_first examples") {
    const FactorableSurface s{Kind::first, ScalarC2::linear(0, 1), ScalarC2::linear(0, 1)};
    CHECK(k_first(s, 0, 0) == doctest::Approx(-1.0));

    const FactorableSurface th{Kind::first, tanh_fn(), ScalarC2::linear(0, 1)};
    test::Rng rng(31);
    for (int i = 0; i < 50; ++i) {
        const double x = rng.uniform(-2, 2), y = rng.uniform(-0.9, 0.9);
        CHECK(k_first(th, x, y) == doctest::Approx(-1.0).epsilon(1e-12));
        CHECK(fd_k(th, x, y) == doctest::Approx(-1.0).epsilon(1e-5));
    }
}

TEST_CASE("k_first vanishes when a factor is constant") {
    test::Rng rng(32);
    for (int i = 0; i < 100; ++i) {
        const double c = rng.uniform(-3, 3);
        const double x = rng.uniform(-2, 2), y = rng.uniform(-2, 2);
        const FactorableSurface gconst{Kind::first, sin_fn(1.3, 0.7), ScalarC2::constant(c)};
        CHECK(k_first(gconst, x, y) == 0.0);
        const FactorableSurface fconst{Kind::first, ScalarC2::constant(c * 0.1),
                                       ScalarC2::polynomial({0.2, 0.1, 0.4})};
        if (std::abs(1 - std::pow(c * 0.1 * (0.1 + 0.8 * y), 2)) > 1e-6) {
            CHECK(k_first(fconst, x, y) == 0.0);
        }
    }
}

TEST_CASE("h_first") {
    // f = 2, g = y^2/4 at y = 0: f g'' / 2 = 1/2
    const FactorableSurface s{Kind::first, ScalarC2::constant(2), ScalarC2::polynomial({0, 0, 0.25})};
    CHECK(h_first(s, 0.3, 0.0) == doctest::Approx(0.5));
    test::Rng rng(33);
    for (int i = 0; i < 100; ++i) {
        const FactorableSurface lin{Kind::first, sin_fn(rng.uniform(0.1, 1), 1.1),
                                    ScalarC2::linear(rng.uniform(-1, 1), rng.uniform(-1, 1))};
        const double x = rng.uniform(-2, 2), y = rng.uniform(-2, 2);
        try {
            CHECK(h_first(lin, x, y) == 0.0);
        } catch (const LightlikeLocus&) {
        }
    }
    // (f g')^2 = 1: f = 1, g = y
    const FactorableSurface ll{Kind::first, ScalarC2::constant(1), ScalarC2::linear(0, 1)};
    CHECK_THROWS_AS(h_first(ll, 0.1, 0.2), LightlikeLocus);
    CHECK_THROWS_AS(k_first(ll, 0.1, 0.2), LightlikeLocus);
}

TEST_CASE("k_second examples") {
    const FactorableSurface ee{Kind::second, ScalarC2::exponential(1, 1), ScalarC2::exponential(1, 1)};
    // numerator vanishes identically; the denominator vanishes too (lightlike surface)
    CHECK_THROWS_AS(k_second(ee, 0.3, 0.4), LightlikeLocus);
    const FactorableSurface ee2{Kind::second, ScalarC2::exponential(1, 1), ScalarC2::exponential(1, 2)};
    CHECK(k_second(ee2, 0.3, 0.4) == doctest::Approx(0.0).epsilon(1e-12));

    const FactorableSurface fc{Kind::second, ScalarC2::constant(2), sin_fn(1, 1)};
    CHECK(k_second(fc, 0.5, 0.7) == 0.0);

    const FactorableSurface yz2{Kind::second, ScalarC2::linear(0, 1), ScalarC2::polynomial({0, 0, 1})};
    CHECK(k_second(yz2, 1, 1) == doctest::Approx(-4.0 / 9.0));
    CHECK(fd_k(yz2, 1, 1) == doctest::Approx(-4.0 / 9.0).epsilon(1e-5));
}

TEST_CASE("h_second examples") {
    const FactorableSurface yz{Kind::second, ScalarC2::linear(0, 1), ScalarC2::linear(0, 1)};
    CHECK_THROWS_AS(h_second(yz, 1, 1), LightlikeLocus);
    CHECK_THROWS_AS(h_second(yz, 0.7, -0.7), LightlikeLocus);
    CHECK(h_second(yz, 1, 2) == doctest::Approx(-2.0 / std::pow(3.0, 1.5)));
    const Curvature c = curvature(yz.jet(1, 2));
    CHECK(c.epsilon == -1);
    CHECK(c.H == doctest::Approx(-2.0 / std::pow(3.0, 1.5)));
}

TEST_CASE("k_second is symmetric in f and g") {
    test::Rng rng(34);
    for (int i = 0; i < 200; ++i) {
        const ScalarC2 f = ScalarC2::polynomial({rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)});
        const ScalarC2 g = ScalarC2::exponential(rng.uniform(0.5, 2), rng.uniform(-1, 1));
        const double y = rng.uniform(-1, 1), z = rng.uniform(-1, 1);
        const FactorableSurface a{Kind::second, f, g};
        const FactorableSurface b{Kind::second, g, f};
        try {
            const double ka = k_second(a, y, z);
            CHECK(k_second(b, z, y) == doctest::Approx(ka).epsilon(1e-12));
        } catch (const LightlikeLocus&) {
        }
    }
}

TEST_CASE("specialized formulas agree with the finite-difference pipeline") {
    test::Rng rng(35);
    int checked = 0;
    for (int i = 0; i < 200; ++i) {
        const FactorableSurface s{Kind::second, ScalarC2::exponential(rng.uniform(0.5, 2), rng.uniform(-1, 1)),
                                  ScalarC2::polynomial({rng.uniform(0.5, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)})};
        const double y = rng.uniform(-1, 1), z = rng.uniform(-1, 1);
        const Jet2 j = s.jet(y, z);
        const double gap = j.r2.x * j.r2.x - j.r1.x * j.r1.x;
        if (std::abs(gap) < 0.05 * (j.r2.x * j.r2.x + j.r1.x * j.r1.x)) {
            continue;
        }
        const Curvature c = curvature(s.surface_fn(DerivativeMode::finite_difference).jet(y, z));
        const double k = k_second(s, y, z);
        const double h = h_second(s, y, z);
        CHECK(std::abs(k - k_in_factorable_convention(c)) <= 1e-4 * std::max(1.0, std::abs(k)));
        CHECK(std::abs(h - kSignH * c.H) <= 1e-4 * std::max(1.0, std::abs(h)));
        ++checked;
    }
    CHECK(checked > 100);
}

TEST_CASE("cross_check") {
    SUBCASE("saddle, spacelike part") {
        const FactorableSurface s{Kind::first, ScalarC2::linear(0, 1), ScalarC2::linear(0, 1)};
        const auto rep = cross_check(s, {-0.5, 0.5, -0.5, 0.5, 41, 41});
        CHECK(rep.points == 41 * 41);
        CHECK(rep.spacelike_points == rep.points);
        CHECK(rep.k_spacelike.sign() == kSignK_spacelike);
        CHECK(rep.max_dk < 1e-9);
        CHECK(rep.max_dh < 1e-9);
        CHECK(rep.matches_documented);
    }
    SUBCASE("saddle, timelike part") {
        const FactorableSurface s{Kind::first, ScalarC2::linear(0, 1), ScalarC2::linear(0, 1)};
        const auto rep = cross_check(s, {1.2, 2.0, -1.0, 1.0, 31, 31});
        CHECK(rep.timelike_points == rep.points);
        CHECK(rep.k_timelike.sign() == kSignK_timelike);
        CHECK(rep.k_timelike.samples == rep.points);
        CHECK(rep.max_dk < 1e-9);
        CHECK(rep.matches_documented);
    }
    SUBCASE("first-kind family") {
        const Family fam = thm31_family({.K0 = 2.5, .lambda1 = 0.2, .lambda2 = 0.1});
        const auto rep = cross_check(fam.surface, fam.domain);
        CHECK(rep.max_dk < 1e-9);
        CHECK(rep.matches_documented);
    }
    SUBCASE("mean-curvature families, both characters") {
        for (Causal c : {Causal::spacelike, Causal::timelike}) {
            const Family a = thm32_family({.H0 = 0.7, .lambda1 = 0.3, .causal = c});
            const auto ra = cross_check(a.surface, a.domain);
            CHECK(ra.max_dh < 1e-9);
            CHECK(ra.matches_documented);
            const Family b = thm42_family({.H0 = 0.7, .lambda1 = 1.3, .lambda2 = 0.8, .causal = c});
            const auto rb = cross_check(b.surface, b.domain);
            CHECK(rb.max_dh < 1e-8);
            CHECK(rb.matches_documented);
            CHECK((c == Causal::spacelike ? rb.spacelike_points : rb.timelike_points) == rb.points);
        }
    }
    SUBCASE("lightlike-crossing grid is rejected") {
        const FactorableSurface s{Kind::first, ScalarC2::linear(0, 1), ScalarC2::linear(0, 1)};
        CHECK_THROWS_AS(cross_check(s, {0.5, 1.5, -1, 1, 10, 10}), GridRejected);
        CHECK_THROWS_AS(cross_check(s, {0.5, 1.5, -1, 1, 1, 10}), GridRejected);
    }
}
