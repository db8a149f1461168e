#include <cmath>

#include "doctest.h"
#include "pgsurf/errors.hpp"
#include "pgsurf/factorable.hpp"
#include "pgsurf/families.hpp"
#include "pgsurf/surface.hpp"
#include "random.hpp"

using namespace pgsurf;

namespace {

// Hand-derived fundamental data of z = f(x) g(y) parametrized by (x, y):
// side tangent (0, 1, q) with q = f g', N = (q, 1)/W, L_ij = -eps z_ij / W.
struct GraphOracle {
    double W, eps, Ny, Nz, L11, L12, L22, K, H;
};

GraphOracle graph_oracle(double zx, double zy, double zxx, double zxy, double zyy) {
    GraphOracle o{};
    const double gap = 1.0 - zy * zy;
    o.W = std::sqrt(std::abs(gap));
    o.eps = gap > 0 ? 1.0 : -1.0;
    o.Ny = zy / o.W;
    o.Nz = 1.0 / o.W;
    o.L11 = -o.eps * zxx / o.W;
    o.L12 = -o.eps * zxy / o.W;
    o.L22 = -o.eps * zyy / o.W;
    (void)zx;
    o.K = -o.eps * (o.L11 * o.L22 - o.L12 * o.L12) / (o.W * o.W);
    o.H = -o.eps * o.L22 / (2 * o.W * o.W);
    return o;
}

Jet2 graph_jet(double x, double y, double z, double zx, double zy, double zxx, double zxy,
               double zyy) {
    return {{x, y, z}, {1, 0, zx}, {0, 1, zy}, {0, 0, zxx}, {0, 0, zxy}, {0, 0, zyy}};
}

Jet2 saddle_jet(double x, double y) { return graph_jet(x, y, x * y, y, x, 0, 1, 0); }

Jet2 plane_jet(double x, double y) { return graph_jet(x, y, 0, 0, 0, 0, 0, 0); }

}  // namespace

TEST_CASE("admissible") {
    CHECK(admissible(saddle_jet(0.2, 0.3)));
    const Jet2 wall{{2, 0.1, 0.2}, {0, 1, 0}, {0, 0, 1}, {}, {}, {}};
    CHECK_FALSE(admissible(wall));
    CHECK_THROWS_AS(first_form(wall), InadmissiblePatch);

    // x = f(y) g(z): admissible wherever f'g or fg' is non-zero.
    const FactorableSurface s{Kind::second, ScalarC2::linear(0, 1), ScalarC2::linear(0, 1)};
    CHECK(admissible(s.jet(1.0, 2.0)));
    CHECK(admissible(s.jet(0.0, 2.0)));    // f'g = 2
    CHECK_FALSE(admissible(s.jet(0.0, 0.0)));  // f'g = fg' = 0
}

TEST_CASE("first_form coefficients") {
    // z = f g with f = sin, g = cos at (0.4, 0.9)
    const double x = 0.4, y = 0.9;
    const double f = std::sin(x), fp = std::cos(x), g = std::cos(y), gp = -std::sin(y);
    const Jet2 j = graph_jet(x, y, f * g, fp * g, f * gp, -f * g, fp * gp, -f * g);
    const FirstForm ff = first_form(j);
    CHECK(ff.g1 == 1.0);
    CHECK(ff.g2 == 0.0);
    CHECK(ff.h11 == doctest::Approx((fp * g) * (fp * g)));
    CHECK(ff.h12 == doctest::Approx(fp * g * f * gp));
    CHECK(ff.h22 == doctest::Approx(1 + (f * gp) * (f * gp)));

    const FirstForm pf = first_form(plane_jet(0.5, -0.5));
    CHECK(pf.g1 == 1.0);
    CHECK(pf.g2 == 0.0);
    CHECK(pf.h11 == 0.0);
    CHECK(pf.h12 == 0.0);
    CHECK(pf.h22 == 1.0);
    // du1 = 0 is isotropic on the plane: only the omega term survives.
    CHECK(pf.ds2(0.0, 2.0, Direction::isotropic) == doctest::Approx(4.0));
    CHECK(pf.ds2(0.0, 2.0, Direction::non_isotropic) == 0.0);
    CHECK(pf.ds2(3.0, 2.0, Direction::non_isotropic) == doctest::Approx(9.0));
}

TEST_CASE("side_norm_W and lightlike rejection") {
    CHECK(side_norm_W(saddle_jet(0, 0)) == doctest::Approx(1.0));
    CHECK(side_norm_W(saddle_jet(0.6, 0.1)) == doctest::Approx(std::sqrt(1 - 0.36)));
    // z = x + y: side tangent (0, 1, 1)
    const Jet2 lightlike = graph_jet(0.3, 0.2, 0.5, 1, 1, 0, 0, 0);
    CHECK_THROWS_AS(side_norm_W(lightlike), LightlikeSurface);
    CHECK_THROWS_AS(gaussian_curvature(lightlike), LightlikeSurface);
    CHECK_THROWS_AS(mean_curvature(lightlike), LightlikeSurface);
}

TEST_CASE("epsilon and normal") {
    const auto en = epsilon_and_normal(saddle_jet(0.5, 0.0));  // f g' = x = 0.5
    CHECK(en.epsilon == 1);
    CHECK(en.S.y == doctest::Approx(1 / std::sqrt(0.75)));
    const auto et = epsilon_and_normal(saddle_jet(1.5, 0.0));  // (f g')^2 > 1
    CHECK(et.epsilon == -1);

    const auto ep = epsilon_and_normal(plane_jet(0, 0));
    CHECK(ep.epsilon == 1);
    CHECK(ep.N.y == 0.0);
    CHECK(ep.N.z == 1.0);
    CHECK(minkowski_dot(ep.N, ep.N) == -1.0);
}

TEST_CASE("S.S = eps and N.N = -eps at random admissible points") {
    test::Rng rng(21);
    int checked = 0;
    while (checked < 500) {
        Jet2 j;
        j.r1 = {rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
        j.r2 = {rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
        const IsoVector t = side_tangent(j);
        if (std::abs(minkowski_dot(t, t)) < 1e-3) {
            continue;
        }
        const auto en = epsilon_and_normal(j);
        CHECK(minkowski_dot(en.S, en.S) == doctest::Approx(en.epsilon).epsilon(1e-9));
        CHECK(minkowski_dot(en.N, en.N) == doctest::Approx(-en.epsilon).epsilon(1e-9));
        ++checked;
    }
}

TEST_CASE("second_form against the graph oracle") {
    test::Rng rng(22);
    for (int i = 0; i < 200; ++i) {
        const double zx = rng.uniform(-2, 2), zy = rng.uniform(-2, 2);
        if (std::abs(1 - zy * zy) < 1e-2) {
            continue;
        }
        const double zxx = rng.uniform(-2, 2), zxy = rng.uniform(-2, 2), zyy = rng.uniform(-2, 2);
        const Jet2 j = graph_jet(0.1, 0.2, 0.3, zx, zy, zxx, zxy, zyy);
        const GraphOracle o = graph_oracle(zx, zy, zxx, zxy, zyy);
        const FundamentalData fd = fundamental_data(j);
        CHECK(fd.W == doctest::Approx(o.W));
        CHECK(fd.epsilon == o.eps);
        CHECK(fd.N.y == doctest::Approx(o.Ny));
        CHECK(fd.N.z == doctest::Approx(o.Nz));
        CHECK(fd.second.L11 == doctest::Approx(o.L11));
        CHECK(fd.second.L12 == doctest::Approx(o.L12));
        CHECK(fd.second.L22 == doctest::Approx(o.L22));
        const Curvature c = curvature(fd);
        CHECK(c.K == doctest::Approx(o.K));
        CHECK(c.H == doctest::Approx(o.H));
    }
    const auto en = epsilon_and_normal(plane_jet(0, 0));
    const SecondForm pl = second_form(plane_jet(0, 0), en.epsilon, en.N);
    CHECK(pl.L11 == 0.0);
    CHECK(pl.L12 == 0.0);
    CHECK(pl.L22 == 0.0);
}

TEST_CASE("second_form branches agree on second-kind patches") {
    const FactorableSurface s{Kind::second, ScalarC2::exponential(1.3, 0.7),
                              ScalarC2::polynomial({0.5, 0.2, 0.9})};
    test::Rng rng(23);
    int checked = 0;
    for (int i = 0; i < 400; ++i) {
        const double y = rng.uniform(-1, 1), z = rng.uniform(-1, 1);
        const Jet2 j = s.jet(y, z);
        if (std::abs(j.r1.x) < 1e-3 || std::abs(j.r2.x) < 1e-3) {
            continue;
        }
        const IsoVector t = side_tangent(j);
        if (std::abs(minkowski_dot(t, t)) < 1e-6) {
            continue;
        }
        const auto en = epsilon_and_normal(j);
        const SecondForm a = second_form(j, en.epsilon, en.N, L_Branch::g1);
        const SecondForm b = second_form(j, en.epsilon, en.N, L_Branch::g2);
        CHECK(std::abs(a.L11 - b.L11) < 1e-9 * std::max(1.0, std::abs(a.L11)));
        CHECK(std::abs(a.L12 - b.L12) < 1e-9 * std::max(1.0, std::abs(a.L12)));
        CHECK(std::abs(a.L22 - b.L22) < 1e-9 * std::max(1.0, std::abs(a.L22)));
        ++checked;
    }
    CHECK(checked > 100);

    // forced branch with a vanishing denominator
    const Jet2 j = plane_jet(0, 0);
    const auto en = epsilon_and_normal(j);
    CHECK_THROWS_AS(second_form(j, en.epsilon, en.N, L_Branch::g2), InadmissiblePatch);
    CHECK(second_form(j, en.epsilon, en.N).branch == L_Branch::g1);
}

TEST_CASE("curvature of the saddle and the plane") {
    // The general definition gives +1 at the origin of z = x y (spacelike there); the
    // specialized first-kind formula gives -1. The two differ by -eps.
    CHECK(gaussian_curvature(saddle_jet(0, 0)) == doctest::Approx(1.0));
    CHECK(mean_curvature(saddle_jet(0, 0)) == 0.0);
    test::Rng rng(24);
    for (int i = 0; i < 100; ++i) {
        const double x = rng.uniform(-3, 3), y = rng.uniform(-3, 3);
        if (std::abs(1 - x * x) < 1e-3) {
            continue;
        }
        CHECK(mean_curvature(saddle_jet(x, y)) == 0.0);
    }
    CHECK(gaussian_curvature(plane_jet(1, 2)) == 0.0);
    CHECK(mean_curvature(plane_jet(1, 2)) == 0.0);
}

TEST_CASE("finite-difference jets agree with analytic jets") {
    std::vector<Family> fams;
    fams.push_back(thm31_family({.K0 = 1.7, .lambda1 = 0.3, .lambda2 = -0.4}));
    fams.push_back(thm32_family({.H0 = 0.8, .lambda1 = 0.2, .causal = Causal::spacelike}));
    fams.push_back(thm32_family({.H0 = 0.8, .lambda1 = 0.2, .causal = Causal::timelike}));
    fams.push_back(thm42_family({.H0 = 0.5, .lambda1 = 1, .lambda2 = 1, .causal = Causal::spacelike}));
    fams.push_back(thm42_family({.H0 = 0.5, .lambda1 = 1, .lambda2 = 1, .causal = Causal::timelike}));
    for (const auto& fam : fams) {
        const SurfaceFn an = fam.surface.surface_fn(DerivativeMode::analytic);
        const SurfaceFn fd = fam.surface.surface_fn(DerivativeMode::finite_difference, 1e-4);
        Grid2 g = fam.domain;
        g.n1 = g.n2 = 7;
        for (std::size_t i = 0; i < g.n1; ++i) {
            for (std::size_t k = 0; k < g.n2; ++k) {
                const Curvature a = curvature(an.jet(g.u1(i), g.u2(k)));
                const Curvature b = curvature(fd.jet(g.u1(i), g.u2(k)));
                CHECK(std::abs(a.K - b.K) <= 1e-5 * std::max(1.0, std::abs(a.K)));
                CHECK(std::abs(a.H - b.H) <= 1e-5 * std::max(1.0, std::abs(a.H)));
            }
        }
    }
}

TEST_CASE("curvature is invariant under motions") {
    test::Rng rng(25);
    const Family fam = thm42_family({.H0 = 0.7, .lambda1 = 1.5, .lambda2 = -0.8,
                                     .causal = Causal::spacelike});
    const SurfaceFn base = fam.surface.surface_fn();
    for (int i = 0; i < 10; ++i) {
        const Motion m = rng.motion();
        const SurfaceFn moved = base.moved(m);
        const SurfaceFn moved_fd = moved.with_mode(DerivativeMode::finite_difference);
        for (int k = 0; k < 20; ++k) {
            const double u1 = rng.uniform(fam.domain.u1_lo, fam.domain.u1_hi);
            const double u2 = rng.uniform(fam.domain.u2_lo, fam.domain.u2_hi);
            const Curvature a = curvature(base.jet(u1, u2));
            const Curvature b = curvature(moved.jet(u1, u2));
            CHECK(std::abs(a.K - b.K) <= 1e-8 * std::max(1.0, std::abs(a.K)));
            CHECK(std::abs(a.H - b.H) <= 1e-8 * std::max(1.0, std::abs(a.H)));
            CHECK(a.epsilon == b.epsilon);
            const Curvature c = curvature(moved_fd.jet(u1, u2));
            CHECK(std::abs(a.H - c.H) <= 1e-4 * std::max(1.0, std::abs(a.H)));
        }
    }
}
