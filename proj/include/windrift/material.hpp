#pragma once

#include "windrift/core.hpp"

#include <optional>
#include <string>

namespace windrift {

/// Ginzburg-Landau coefficients of the film plus the transport data needed
/// for the vortex mass and viscosity estimates.
struct MaterialParams {
    double zeta = 0;        ///< gradient coefficient
    double a_coeff = 0;     ///< quadratic coefficient
    double b_coeff = 0;     ///< quartic coefficient
    double g_coupling = 0;  ///< g = 2e/c
    double sigma = 0;       ///< normal-state conductivity
    double d_thickness = 0; ///< film thickness
    std::optional<double> l_tr;  ///< electron mean-free path (diagnostic only)
    double c_light = 1;     ///< speed of light in the user's unit system

    /// Throws PreconditionError naming the first non-positive field.
    void validate() const;
};

/// Length scales and vortex dynamics coefficients derived from MaterialParams.
/// The mass and viscosity are order-of-magnitude estimates with unit prefactor.
struct DerivedScales {
    double delta = 0;         ///< penetration depth
    double xi = 0;            ///< coherence length
    double psi0 = 0;
    double kappa = 0;         ///< delta / xi
    double flux_quantum = 0;  ///< 2 pi / g
    double h_c2 = 0;          ///< flux_quantum / xi^2
    double mass = 0;          ///< d / (e^2 xi^2), estimate
    double eta = 0;           ///< d sigma h_c2 / (e c), estimate
    double gamma = 0;         ///< eta / mass

    // Carried along so field routines need nothing else.
    double g_coupling = 0;
    double e_charge = 0;
    double c_light = 0;
    double sigma = 0;
};

DerivedScales derive_scales(const MaterialParams& params);

enum class Verdict { Yes, No, Unknown };

std::string to_string(Verdict v);

struct RegimeThresholds {
    double type_ii_ratio = 1e-2;  ///< extreme type-II when g^2 zeta^2 / b <= this
    double dirty_ratio = 0.1;     ///< dirty when l_tr / xi <= this
};

struct RegimeReport {
    Verdict extreme_type_ii = Verdict::Unknown;
    Verdict dirty_limit = Verdict::Unknown;
    double type_ii_ratio = 0;             ///< g^2 zeta^2 / b
    std::optional<double> dirty_ratio;    ///< l_tr / xi
};

RegimeReport classify_regime(const MaterialParams& params, const DerivedScales& scales,
                             const RegimeThresholds& thresholds = {});

}  // namespace windrift
