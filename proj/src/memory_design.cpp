#include "windrift/memory_design.hpp"

#include "windrift/core.hpp"

#include <cmath>

namespace windrift {

void DeviceSpec::validate() const
{
    require(r_eff > 0, "r_eff must be positive");
    require(n1 >= 0, "n1 must be non-negative");
    require(n2 > n1, "n2 must exceed n1 (levels must differ)");
    require(epsilon_line >= 0, "epsilon_line must be non-negative");
    require(length_unit_m > 0, "length_unit_m must be positive");
}

LevelSplitting level_splitting(const DeviceSpec& spec)
{
    spec.validate();
    using namespace constants;
    LevelSplitting out;
    out.delta_n2 = spec.n2 * spec.n2 - spec.n1 * spec.n1;
    out.wavelength = 2 * kPi * kFineStructure * spec.r_eff / out.delta_n2;
    out.wavelength_m = out.wavelength * spec.length_unit_m;
    // e^2 = alpha hbar c (Gaussian units) turns hbar^2 c^2 / (e^2 R) into hbar c / (alpha R).
    const double r_m = spec.r_eff * spec.length_unit_m;
    out.energy_j = kHbarSI * kSpeedOfLightSI * out.delta_n2 / (kFineStructure * r_m);
    out.energy_ev = out.energy_j / kElectronVoltSI;
    out.angular_frequency = out.energy_j / kHbarSI;
    return out;
}

double solid_torus_suppression(const DeviceSpec& spec)
{
    require(spec.temperature > 0, "temperature must be positive");
    require(spec.epsilon_line >= 0, "epsilon_line must be non-negative");
    require(spec.l_y > 0, "l_y must be positive");
    return std::exp(-spec.epsilon_line * spec.l_y / spec.temperature);
}

double anyon_prefactor_log(double l_prime, double rho_min)
{
    require(rho_min > 0, "rho_min must be positive");
    require(l_prime > rho_min, "l_prime must exceed rho_min");
    return std::log(l_prime / rho_min);
}

std::string to_string(EquivalenceClass c)
{
    switch (c) {
    case EquivalenceClass::EvenEven: return "even-even";
    case EquivalenceClass::EvenOdd: return "even-odd";
    case EquivalenceClass::OddEven: return "odd-even";
    case EquivalenceClass::OddOdd: return "odd-odd";
    }
    return "unknown";
}

EquivalenceClass equivalence_class(long long n_x, long long n_y)
{
    const bool odd_x = ((n_x % 2) + 2) % 2 == 1;
    const bool odd_y = ((n_y % 2) + 2) % 2 == 1;
    if (odd_x) return odd_y ? EquivalenceClass::OddOdd : EquivalenceClass::OddEven;
    return odd_y ? EquivalenceClass::EvenOdd : EquivalenceClass::EvenEven;
}

LoopCurrent loop_current_scale(double l_x, double l_y, double flux_quantum, double c_light)
{
    require(l_y > 0, "l_y must be positive");
    require(l_x > l_y, "l_x must exceed l_y");
    require(flux_quantum > 0, "flux_quantum must be positive");
    require(c_light > 0, "c_light must be positive");
    LoopCurrent out;
    const double log_ratio = std::log(l_x / l_y);
    out.clamped = log_ratio <= 1;
    out.inductance = out.clamped ? l_x : l_x * log_ratio;
    out.current = c_light * flux_quantum / out.inductance;
    return out;
}

}  // namespace windrift
