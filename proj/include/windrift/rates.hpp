#pragma once

// Three routes to the topological transition rate Gamma: half the slope of
// the winding mean-square displacement, half the integral of the winding
// velocity autocorrelation, and the closed-form diffusing-vortex result.

#include "windrift/core.hpp"
#include "windrift/langevin.hpp"
#include "windrift/torus.hpp"

#include <span>
#include <string>

namespace windrift {

enum class RateMethod { Msd, GreenKubo, Analytic, Predicted };

std::string to_string(RateMethod method);

struct RateEstimate {
    double gamma_rate = 0;
    double standard_error = 0;
    RateMethod method = RateMethod::Analytic;
};

struct FitWindow {
    double t_min = 0;
    double t_max = 0;
};

/// t_min = 10/gamma, t_max = min(total_time / 2, 10 t_min).
FitWindow default_fit_window(const ThermalEnv& env, double total_time);

/// 20 / gamma.
double default_green_kubo_cutoff(const ThermalEnv& env);

/// Half the least-squares slope (with intercept) of the time-origin averaged
/// <[alpha(t+tau) - alpha(t)]^2> over up to 32 lags tau in the window.
double msd_rate(const AlphaSeries& series, const FitWindow& window);

/// Mean of per-replica msd_rate values with the replica-scatter standard
/// error. A single series is cut into 20 consecutive blocks instead; any other
/// count below 20 is rejected.
RateEstimate rate_from_msd(std::span<const AlphaSeries> replicas, const FitWindow& window);

/// Gamma = (dt/2) [C(0) + 2 sum_{k=1}^{K} C(k)], K = floor(cutoff / dt), with
/// C the lag-product average of alpha' = increment / dt.
double green_kubo_rate(std::span<const double> increments, double dt, double cutoff);

/// Point estimate from the whole series; standard error from up to 20 blocks
/// of at least 2(K+1) increments each.
RateEstimate rate_from_green_kubo(std::span<const double> increments, double dt, double cutoff);

/// Per-replica Green-Kubo rates with replica-scatter standard error; one
/// replica falls back to block averaging.
RateEstimate rate_from_green_kubo(std::span<const AlphaSeries> replicas, double cutoff);

/// Gamma = T (n_v + n_a) / (eta L^2) with L the crossing length for `axis`.
RateEstimate analytic_rate(const ThermalEnv& env, const TorusGeometry& geometry, int n_vortices,
                           int n_antivortices, Axis axis);
/// Same for a real-valued (mean) total count.
RateEstimate analytic_rate(const ThermalEnv& env, const TorusGeometry& geometry, double total_count, Axis axis);

struct PredictedRate {
    RateEstimate rate;
    double storage_time = 0;  ///< 1 / Gamma, infinite when Gamma = 0
};

/// Gamma_x = (M T^2 / (pi eta)) (l_x / l_y) e^{-F0/T}; Axis::Y swaps l_x and l_y.
PredictedRate predicted_rate(const ThermalEnv& env, const TorusGeometry& geometry, double f0, Axis axis);

/// Successive differences of a series.
std::vector<double> increments(const AlphaSeries& series);

}  // namespace windrift
