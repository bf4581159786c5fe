#pragma once

#include <span>
#include <vector>

namespace windrift {

/// Lag-k product averages C(k) = (1/(N-k)) sum_i x_i x_{i+k}, k = 0..max_lag.
struct Autocorrelation {
    double dt = 0;
    std::vector<double> values;

    double lag_time(std::size_t k) const { return dt * static_cast<double>(k); }
};

Autocorrelation autocorrelation(std::span<const double> series, double dt, std::size_t max_lag);

/// Average of the per-series autocorrelations (all series equally weighted).
Autocorrelation autocorrelation(std::span<const std::vector<double>> series, double dt, std::size_t max_lag);

/// C(tau) = A exp(-rate tau), fitted to log C with weights C^2 over lags from
/// 0 up to the first lag where C drops below C(0) e^{-window_decay}.
struct ExponentialFit {
    double amplitude = 0;
    double decay_rate = 0;
    double amplitude_stderr = 0;
    double decay_rate_stderr = 0;
    std::size_t points = 0;
    /// False when only C(0) lies in the window; decay_rate is then the
    /// resolution bound window_decay / dt and amplitude is C(0).
    bool resolved = false;
};

ExponentialFit fit_exponential(const Autocorrelation& acf, double window_decay = 2.0);

struct LineFit {
    double intercept = 0;
    double slope = 0;
    double slope_stderr = 0;
};

/// Ordinary least squares y = intercept + slope x.
LineFit fit_line(std::span<const double> x, std::span<const double> y);

struct MeanEstimate {
    double mean = 0;
    double standard_error = 0;
};

/// Mean and standard error of the mean (0 for fewer than two values).
MeanEstimate mean_with_stderr(std::span<const double> values);

}  // namespace windrift
