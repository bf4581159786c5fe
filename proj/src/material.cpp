#include "windrift/material.hpp"

#include "windrift/core.hpp"

#include <cmath>

namespace windrift {

void MaterialParams::validate() const
{
    require(zeta > 0, "zeta must be positive");
    require(a_coeff > 0, "a_coeff must be positive");
    require(b_coeff > 0, "b_coeff must be positive");
    require(g_coupling > 0, "g_coupling must be positive");
    require(sigma > 0, "sigma must be positive");
    require(d_thickness > 0, "d_thickness must be positive");
    require(c_light > 0, "c_light must be positive");
    require(!l_tr || *l_tr > 0, "l_tr must be positive");
}

DerivedScales derive_scales(const MaterialParams& p)
{
    p.validate();

    DerivedScales s;
    s.psi0 = std::sqrt(p.a_coeff / (2 * p.b_coeff));
    s.xi = std::sqrt(p.zeta / (2 * p.a_coeff));
    s.delta = 1 / std::sqrt(2 * p.g_coupling * p.g_coupling * p.zeta * s.psi0 * s.psi0);
    s.kappa = s.delta / s.xi;
    s.flux_quantum = 2 * kPi / p.g_coupling;
    s.h_c2 = s.flux_quantum / (s.xi * s.xi);

    // g = 2e/c
    const double e = p.g_coupling * p.c_light / 2;
    s.mass = p.d_thickness / (e * e * s.xi * s.xi);
    s.eta = p.d_thickness * p.sigma * s.h_c2 / (e * p.c_light);
    s.gamma = s.eta / s.mass;

    s.g_coupling = p.g_coupling;
    s.e_charge = e;
    s.c_light = p.c_light;
    s.sigma = p.sigma;
    return s;
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::Yes: return "true";
    case Verdict::No: return "false";
    case Verdict::Unknown: break;
    }
    return "unknown";
}

RegimeReport classify_regime(const MaterialParams& p, const DerivedScales& s,
                             const RegimeThresholds& thresholds)
{
    RegimeReport r;
    r.type_ii_ratio = p.g_coupling * p.g_coupling * p.zeta * p.zeta / p.b_coeff;
    r.extreme_type_ii = r.type_ii_ratio <= thresholds.type_ii_ratio ? Verdict::Yes : Verdict::No;
    if (p.l_tr) {
        r.dirty_ratio = *p.l_tr / s.xi;
        r.dirty_limit = *r.dirty_ratio <= thresholds.dirty_ratio ? Verdict::Yes : Verdict::No;
    }
    return r;
}

}  // namespace windrift
