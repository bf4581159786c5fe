#include "windrift/vortex_fields.hpp"

#include "windrift/bessel.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>

namespace windrift {

RadialProfile static_b_profile(double r, const DerivedScales& s)
{
    require(r > 0, "static_b: r must be positive (core not modeled)");
    const double delta = s.delta;
    const double z = r / delta;
    const auto [k0, k1] = bessel_k01(z);
    const double scale = 1 / (s.g_coupling * delta * delta);
    return {scale * k0, -scale * k1 / delta, scale * (k0 + k1 / z) / (delta * delta)};
}

double static_b(double r, const DerivedScales& s)
{
    return static_b_profile(r, s).b;
}

Vec2 static_b_gradient(const Vec2& pos, const DerivedScales& s)
{
    const double r = pos.norm();
    require(r > 0, "static_b_gradient: position must not coincide with the vortex center");
    return static_b_profile(r, s).db * pos / r;
}

Vec2 moving_vortex_e(const Vec2& pos, const Vec2& v, const DerivedScales& s, double c_light)
{
    const double r = pos.norm();
    require(r > 0, "moving_vortex_e: position must not coincide with the vortex center");
    require(c_light > 0, "moving_vortex_e: c_light must be positive");

    const auto prof = static_b_profile(r, s);
    const Vec2 rhat = pos / r;
    const Mat2 radial = rhat * rhat.transpose();
    const Mat2 hessian = prof.d2b * radial + (prof.db / r) * (Mat2::Identity() - radial);

    // v x e_z
    const Vec2 w(v.y(), -v.x());
    return (s.delta * s.delta * hessian * w - prof.b * w) / c_light;
}

EnergyIntegral field_energy(double r_min, double r_max, double v, const DerivedScales& s,
                            double c_light, double d)
{
    require(r_min > 0, "field_energy: r_min must be positive");
    require(r_max > r_min, "field_energy: r_max must exceed r_min");
    require(v > 0, "field_energy: v must be positive");
    require(d > 0, "field_energy: d must be positive");

    const Vec2 vel(v, 0);
    // Angular mean of E^2 at radius r: the average of two orthogonal directions.
    auto mean_e2 = [&](double r) {
        const Vec2 ea = moving_vortex_e(Vec2(r, 0), vel, s, c_light);
        const Vec2 eb = moving_vortex_e(Vec2(0, r), vel, s, c_light);
        return 0.5 * (ea.squaredNorm() + eb.squaredNorm());
    };
    // r = e^u, dr = r du; integrand 2 pi r E^2 dr -> 2 pi r^2 E^2 du
    auto integrand = [&](double u) {
        const double r = std::exp(u);
        return 2 * kPi * r * r * mean_e2(r);
    };
    using Quadrature = boost::math::quadrature::gauss_kronrod<double, 15>;
    const double planar = Quadrature::integrate(integrand, std::log(r_min), std::log(r_max), 30, 1e-10);

    const double volume_integral = d * planar;  // integral of E^2 d^3x
    EnergyIntegral out;
    out.r_min = r_min;
    out.r_max = r_max;
    out.energy = volume_integral / (8 * kPi);
    out.mass_estimate = 2 * out.energy / (v * v);
    out.viscosity_estimate = s.sigma * volume_integral / (v * v);
    const double e = s.e_charge;
    out.mass_coefficient = out.mass_estimate / (d / (e * e * s.xi * s.xi));
    return out;
}

double helmholtz_residual(double r, const DerivedScales& s, double h)
{
    require(h > 0, "helmholtz_residual: h must be positive");
    require(r > 2 * h, "helmholtz_residual: r too small for the stencil (need r > 2h)");
    const double du = h / r;
    const double bp = static_b(r * std::exp(du), s);
    const double b0 = static_b(r, s);
    const double bm = static_b(r * std::exp(-du), s);
    const double laplacian = (bp - 2 * b0 + bm) / (du * du * r * r);
    return std::abs(s.delta * s.delta * laplacian - b0);
}

double helmholtz_residual_analytic(double r, const DerivedScales& s)
{
    const auto prof = static_b_profile(r, s);
    return std::abs(s.delta * s.delta * (prof.d2b + prof.db / r) - prof.b);
}

std::vector<FieldSample> field_table(double r_min, double r_max, int n, const Vec2& direction,
                                     const Vec2& v, const DerivedScales& s, double c_light)
{
    require(r_min > 0 && r_max > r_min, "field_table: need 0 < r_min < r_max");
    require(n >= 2, "field_table: need at least two points");
    require(direction.norm() > 0, "field_table: direction must be nonzero");
    const Vec2 unit = direction.normalized();
    std::vector<FieldSample> rows;
    rows.reserve(static_cast<std::size_t>(n));
    const double step = std::log(r_max / r_min) / (n - 1);
    for (int i = 0; i < n; ++i) {
        const double r = i == n - 1 ? r_max : r_min * std::exp(step * i);
        const Vec2 e = moving_vortex_e(r * unit, v, s, c_light);
        rows.push_back({r, static_b(r, s), e, e.squaredNorm()});
    }
    return rows;
}

}  // namespace windrift
