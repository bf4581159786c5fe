#include "doctest.h"

#include "windrift/bessel.hpp"
#include "windrift/vortex_fields.hpp"

#include <Eigen/Geometry>

#include <cmath>

using namespace windrift;

namespace {

DerivedScales unit_scales()
{
    DerivedScales s;
    s.delta = 1;
    s.xi = 0.01;
    s.g_coupling = 1;
    s.c_light = 1;
    s.kappa = 100;
    return s;
}

// kappa = 100 with delta = 70.7, xi = 0.707.
DerivedScales kappa100()
{
    MaterialParams p;
    p.zeta = 1;
    p.a_coeff = 1;
    p.b_coeff = 50;
    p.g_coupling = 0.1;
    p.sigma = 1;
    p.d_thickness = 1;
    return derive_scales(p);
}

}  // namespace

TEST_CASE("static field value and decay")
{
    const auto s = unit_scales();
    CHECK(static_b(1.0, s) == doctest::Approx(0.42102443824070834).epsilon(1e-14));
    CHECK(static_b(10.0, s) < 1e-4 * static_b(1.0, s));
    CHECK_THROWS_AS(static_b(0.0, s), PreconditionError);
}

TEST_CASE("B g delta^2 depends on r / delta only")
{
    auto a = unit_scales();
    auto b = a;
    b.g_coupling = 3;
    b.delta = 2.5;
    for (double x : {0.1, 1.0, 4.0}) {
        const double fa = static_b(x * a.delta, a) * a.g_coupling * a.delta * a.delta;
        const double fb = static_b(x * b.delta, b) * b.g_coupling * b.delta * b.delta;
        CHECK(fa == doctest::Approx(fb).epsilon(1e-14));
    }
}

TEST_CASE("electric field is linear in v and rotation covariant")
{
    const auto s = kappa100();
    const Vec2 pos(3.0, -1.5);
    CHECK(moving_vortex_e(pos, Vec2::Zero(), s, 1).norm() == 0.0);

    const Vec2 v(0.2, 0.05);
    const Vec2 e = moving_vortex_e(pos, v, s, 1);
    CHECK((moving_vortex_e(pos, 2 * v, s, 1) - 2 * e).norm() < 1e-15 * e.norm() * 10);

    const double phi = 0.7;
    const Mat2 rot = Eigen::Rotation2Dd(phi).toRotationMatrix();
    const Vec2 rotated = moving_vortex_e(rot * pos, rot * v, s, 1);
    CHECK((rotated - rot * e).norm() < 1e-13 * e.norm());
    CHECK_THROWS_AS(moving_vortex_e(Vec2::Zero(), v, s, 1), PreconditionError);
}

TEST_CASE("far-field E^2 ~ 1 / r^4 between xi and delta")
{
    const auto s = kappa100();
    const Vec2 v(0, 1);
    for (double angle : {0.0, 0.6, 1.3}) {
        const Vec2 dir(std::cos(angle), std::sin(angle));
        const double r1 = 0.01 * s.delta, r2 = 0.1 * s.delta;
        const double slope = std::log(moving_vortex_e(r2 * dir, v, s, 1).squaredNorm() /
                                      moving_vortex_e(r1 * dir, v, s, 1).squaredNorm()) /
                             std::log(r2 / r1);
        CHECK(slope > -4.1);
        CHECK(slope < -3.9);
    }
}

TEST_CASE("Helmholtz residual")
{
    const auto s = kappa100();
    const double b = static_b(s.delta, s);
    CHECK(helmholtz_residual(s.delta, s, s.delta / 1000) / b < 1e-4);
    CHECK(helmholtz_residual_analytic(s.delta, s) / b < 1e-13);

    // Second-order stencil: doubling h roughly quadruples the error. Near the
    // core the residual is already at round-off, so probe the outer region.
    const double r = s.delta;
    const double e1 = helmholtz_residual(r, s, r / 1000);
    const double e2 = helmholtz_residual(r, s, r / 500);
    CHECK(e2 / e1 == doctest::Approx(4).epsilon(0.1));
    CHECK_THROWS_AS(helmholtz_residual(1.0, s, 0.5), PreconditionError);
}

TEST_CASE("field energy scaling")
{
    const auto s = kappa100();
    const auto base = field_energy(s.xi, s.delta, 0.01, s, 1, 1);
    CHECK(base.mass_estimate == doctest::Approx(2 * base.energy / 1e-4).epsilon(1e-12));
    // The core-dominated annulus gives 1/16 of d / (e^2 xi^2).
    CHECK(base.mass_coefficient == doctest::Approx(1.0 / 16).epsilon(0.05));

    const auto fast = field_energy(s.xi, s.delta, 0.02, s, 1, 1);
    CHECK(fast.energy == doctest::Approx(4 * base.energy).epsilon(1e-9));
    CHECK(fast.mass_estimate == doctest::Approx(base.mass_estimate).epsilon(1e-9));

    const auto inner = field_energy(s.xi / 2, s.delta, 0.01, s, 1, 1);
    CHECK(inner.energy / base.energy == doctest::Approx(4).epsilon(0.05));

    const auto thick = field_energy(s.xi, s.delta, 0.01, s, 1, 3);
    CHECK(thick.energy == doctest::Approx(3 * base.energy).epsilon(1e-14));

    CHECK(base.viscosity_estimate > 0);
    CHECK_THROWS_AS(field_energy(s.delta, s.xi, 0.01, s, 1, 1), PreconditionError);
    CHECK_THROWS_AS(field_energy(s.xi, s.delta, 0.0, s, 1, 1), PreconditionError);
}

TEST_CASE("field table is log spaced along the requested ray")
{
    const auto s = kappa100();
    const auto rows = field_table(1.0, 100.0, 3, Vec2(1, 0), Vec2(0, 1), s, 1);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].r == doctest::Approx(1.0));
    CHECK(rows[1].r == doctest::Approx(10.0));
    CHECK(rows[2].r == doctest::Approx(100.0));
    for (const auto& row : rows) {
        CHECK(row.b == doctest::Approx(static_b(row.r, s)));
        CHECK(row.e2 == doctest::Approx(row.e.squaredNorm()));
    }
}
