#pragma once

// Order-of-magnitude design estimates for a toroidal quantum memory: level
// spacing of the trapped-flux "atom", the matching wavelength, the Boltzmann
// suppression of a critical flux line in a solid torus, and related scales.
// Every estimate uses unit prefactors.

#include "windrift/core.hpp"

#include <string>

namespace windrift {

namespace constants {
inline constexpr double kFineStructure = 7.2973525693e-3;
inline constexpr double kHbarSI = 1.054571817e-34;          // J s
inline constexpr double kSpeedOfLightSI = 299792458.0;      // m / s
inline constexpr double kElectronVoltSI = 1.602176634e-19;  // J
}  // namespace constants

struct DeviceSpec {
    double r_eff = 0;         ///< effective electromagnetic size R (user length unit)
    int n1 = 0;
    int n2 = 1;
    double l_x = 0;
    double l_y = 0;
    double epsilon_line = 0;  ///< flux-line energy per unit length (user energy / length)
    double temperature = 0;   ///< user energy unit
    double length_unit_m = 1; ///< meters per user length unit

    void validate() const;
};

struct LevelSplitting {
    int delta_n2 = 0;             ///< n2^2 - n1^2
    double wavelength = 0;        ///< user length unit
    double wavelength_m = 0;
    double energy_j = 0;          ///< hbar omega
    double energy_ev = 0;
    double angular_frequency = 0; ///< omega, rad / s
};

/// hbar omega = hbar^2 c^2 (n2^2 - n1^2) / (e^2 R), lambda = 2 pi alpha R / (n2^2 - n1^2).
LevelSplitting level_splitting(const DeviceSpec& spec);

/// exp(-epsilon_line l_y / T).
double solid_torus_suppression(const DeviceSpec& spec);

/// ln(l_prime / rho_min).
double anyon_prefactor_log(double l_prime, double rho_min);

enum class EquivalenceClass { EvenEven, EvenOdd, OddEven, OddOdd };

std::string to_string(EquivalenceClass c);

/// Parities of (n_x, n_y) with a non-negative modulus.
EquivalenceClass equivalence_class(long long n_x, long long n_y);

struct LoopCurrent {
    double inductance = 0;  ///< l_x ln(l_x / l_y), clamped to l_x when the log is <= 1
    double current = 0;     ///< c Phi0 / inductance
    bool clamped = false;
};

LoopCurrent loop_current_scale(double l_x, double l_y, double flux_quantum, double c_light);

}  // namespace windrift
