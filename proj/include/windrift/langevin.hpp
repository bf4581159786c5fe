#pragma once

// Single-vortex Langevin dynamics M r'' + eta r' = f(t) with white-noise
// force <f_i(t) f_j(t')> = 2 eta T delta_ij delta(t - t'), integrated with the
// exact Ornstein-Uhlenbeck propagator (no step-size bias).

#include "windrift/core.hpp"
#include "windrift/random.hpp"

#include <cstdint>
#include <vector>

namespace windrift {

struct ThermalEnv {
    double mass = 1;
    double eta = 1;
    double temperature = 1;

    ThermalEnv() = default;
    ThermalEnv(double mass, double eta, double temperature);

    double gamma() const { return eta / mass; }
    /// Stationary velocity variance per axis, T / M.
    double velocity_variance() const { return temperature / mass; }
    /// Einstein diffusion coefficient per coordinate, T / eta.
    double diffusion() const { return temperature / eta; }
};

struct Walker {
    Vec2 pos = Vec2::Zero();
    Vec2 vel = Vec2::Zero();
    int charge = 1;  ///< +1 vortex, -1 antivortex
};

/// Exact one-step transition of the free underdamped Langevin process for a
/// fixed (dt, env). Per axis, given standard normals (n1, n2):
///   v' = v e^{-g dt} + sv n1
///   x' = x + v (1 - e^{-g dt}) / g + (cov / sv) n1 + sx_cond n2
class OuPropagator {
public:
    OuPropagator(double dt, const ThermalEnv& env);

    /// noise = (n1_x, n2_x, n1_y, n2_y).
    void advance(Walker& w, const Eigen::Vector4d& noise) const;

    double dt() const { return dt_; }
    double velocity_decay() const { return decay_; }
    double velocity_sd() const { return sv_; }
    double position_variance() const { return var_x_; }
    double covariance() const { return cov_; }

private:
    double dt_;
    double decay_;
    double drift_;      // (1 - e^{-g dt}) / g
    double sv_;
    double var_x_;
    double cov_;
    double x_from_n1_;  // cov / sv
    double x_from_n2_;  // conditional sd of the position increment
};

/// One exact step; `noise` holds a pair of standard normals per axis.
Walker step_walker(const Walker& w, double dt, const ThermalEnv& env, const Eigen::Vector4d& noise);

/// Per-walker record of a free (unconfined) run.
struct FreeWalkerRecord {
    std::uint64_t samples = 0;   ///< post-burn-in steps accumulated in the moments
    Vec2 mean_vel = Vec2::Zero();
    Vec2 mean_vel2 = Vec2::Zero();
    std::vector<double> vy_series;   ///< v_y every `velocity_stride` steps
    std::vector<Vec2> positions;     ///< unwrapped position every `position_stride` steps
};

struct FreeRunConfig {
    ThermalEnv env;
    double dt = 0.01;
    std::uint64_t steps = 0;          ///< after burn-in
    std::uint64_t burn_in_steps = 0;
    std::uint64_t velocity_stride = 0;  ///< 0 disables the velocity series
    std::uint64_t position_stride = 0;  ///< 0 disables the trajectory
    std::uint64_t master_seed = 0;
    std::uint32_t replica = 0;
};

/// Runs `n_walkers` independent walkers started at rest at the origin. Walker
/// i uses stream (seed, replica, i); results are independent of `lanes`.
std::vector<FreeWalkerRecord> simulate_free_walkers(const FreeRunConfig& config, int n_walkers, int lanes = 1);

/// Unwrapped positions of one or more walkers at a fixed sampling interval.
struct Trajectory {
    double sample_interval = 0;
    std::vector<std::vector<Vec2>> walkers;
};

struct DiffusionCheck {
    double d_measured = 0;
    double d_stderr = 0;
    double d_expected = 0;   ///< T / eta
    double ratio = 0;        ///< d_measured / d_expected (NaN when T = 0)
    double ratio_stderr = 0;
    double window_min = 0;
    double window_max = 0;
};

/// Diffusion coefficient per coordinate from the slope of the mean-square
/// displacement over lags in [10/gamma, min(duration/4, 50/gamma)].
DiffusionCheck einstein_diffusion_check(const Trajectory& trajectory, const ThermalEnv& env);

}  // namespace windrift
