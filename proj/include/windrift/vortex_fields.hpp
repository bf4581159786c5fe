#pragma once

// Far-field electromagnetic profile of a single vortex in an extreme type-II
// film: static magnetic field, the electric field induced by uniform motion,
// and the cutoff field-energy integrals behind the mass and viscosity
// estimates. Nothing here models the core r < xi.

#include "windrift/core.hpp"
#include "windrift/material.hpp"

#include <vector>

namespace windrift {

/// B_z of a static vortex at distance r from its center.
double static_b(double r, const DerivedScales& scales);

/// Radial profile derivatives (B, dB/dr, d2B/dr2), from K0' = -K1 and
/// K1' = -K0 - K1/z.
struct RadialProfile {
    double b;
    double db;
    double d2b;
};
RadialProfile static_b_profile(double r, const DerivedScales& scales);

/// Gradient of B_z at planar position `pos`.
Vec2 static_b_gradient(const Vec2& pos, const DerivedScales& scales);

/// Electric field at `pos` (relative to the vortex center) of a vortex moving
/// with velocity `v`: the transported magnetic field plus the divergence-free
/// correction delta^2 (v_y d_x - v_x d_y) grad B, both divided by c.
Vec2 moving_vortex_e(const Vec2& pos, const Vec2& v, const DerivedScales& scales, double c_light);

struct EnergyIntegral {
    double r_min = 0;
    double r_max = 0;
    double energy = 0;              ///< (d / 8 pi) * integral of E^2 over the annulus
    double mass_estimate = 0;       ///< 2 energy / v^2
    double viscosity_estimate = 0;  ///< sigma * integral E^2 d^3x / v^2
    /// mass_estimate divided by the unit-coefficient estimate d / (e^2 xi^2).
    double mass_coefficient = 0;
};

/// Field energy of a vortex moving at speed v, integrated over
/// r_min < r < r_max and the film thickness d. The angular average of E^2 is
/// exact (E^2 is a quadratic form in the direction of `pos`); the radial
/// integral is adaptive Gauss-Kronrod in log r to relative tolerance 1e-8.
EnergyIntegral field_energy(double r_min, double r_max, double v, const DerivedScales& scales,
                            double c_light, double d);

/// |delta^2 lap B - B| at radius r using a central second difference in
/// log r with points r e^{+-h/r}; in log-radius the 2D Laplacian of a radial
/// field is r^-2 d^2B/du^2.
double helmholtz_residual(double r, const DerivedScales& scales, double h);

/// Same residual from the analytic derivatives B'' + B'/r.
double helmholtz_residual_analytic(double r, const DerivedScales& scales);

/// One row of the field table export.
struct FieldSample {
    double r;
    double b;
    Vec2 e;
    double e2;
};

/// Samples along the ray `direction` at `n` log-spaced radii in [r_min, r_max].
std::vector<FieldSample> field_table(double r_min, double r_max, int n, const Vec2& direction,
                                     const Vec2& v, const DerivedScales& scales, double c_light);

}  // namespace windrift
