#include "windrift/rates.hpp"

#include "windrift/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace windrift {

namespace {

constexpr std::size_t kBlocks = 20;
constexpr std::size_t kMaxMsdLags = 32;

std::vector<std::size_t> lag_grid(std::size_t k_min, std::size_t k_max, std::size_t count)
{
    std::vector<std::size_t> lags;
    count = std::min(count, k_max - k_min + 1);
    for (std::size_t j = 0; j < count; ++j) {
        const std::size_t k = count == 1 ? k_min : k_min + (k_max - k_min) * j / (count - 1);
        if (lags.empty() || lags.back() != k) lags.push_back(k);
    }
    return lags;
}

AlphaSeries slice(const AlphaSeries& s, std::size_t begin, std::size_t count)
{
    AlphaSeries out;
    out.sample_interval = s.sample_interval;
    out.values.assign(s.values.begin() + static_cast<std::ptrdiff_t>(begin),
                      s.values.begin() + static_cast<std::ptrdiff_t>(begin + count));
    return out;
}

}  // namespace

std::string to_string(RateMethod method)
{
    switch (method) {
    case RateMethod::Msd: return "msd";
    case RateMethod::GreenKubo: return "green_kubo";
    case RateMethod::Analytic: return "analytic";
    case RateMethod::Predicted: return "predicted";
    }
    return "unknown";
}

FitWindow default_fit_window(const ThermalEnv& env, double total_time)
{
    const double t_min = 10 / env.gamma();
    return {t_min, std::min(total_time / 2, 10 * t_min)};
}

double default_green_kubo_cutoff(const ThermalEnv& env)
{
    return 20 / env.gamma();
}

double msd_rate(const AlphaSeries& series, const FitWindow& window)
{
    const double dt = series.sample_interval;
    require(dt > 0, "msd_rate: sample_interval must be positive");
    require(window.t_min > 0 && window.t_max > window.t_min, "msd_rate: need 0 < t_min < t_max");
    const auto k_min = static_cast<std::size_t>(std::ceil(window.t_min / dt - 1e-9));
    const auto k_max = static_cast<std::size_t>(std::floor(window.t_max / dt + 1e-9));
    const std::size_t n = series.values.size();
    require(k_max > k_min, "msd_rate: fit window holds fewer than two lags");
    require(k_max < n, "msd_rate: fit window exceeds the series duration");

    const auto lags = lag_grid(k_min, k_max, kMaxMsdLags);
    std::vector<double> t, msd;
    const auto& a = series.values;
    for (std::size_t k : lags) {
        double sum = 0;
        for (std::size_t i = 0; i + k < n; ++i) {
            const double d = a[i + k] - a[i];
            sum += d * d;
        }
        t.push_back(dt * static_cast<double>(k));
        msd.push_back(sum / static_cast<double>(n - k));
    }
    return fit_line(t, msd).slope / 2;
}

RateEstimate rate_from_msd(std::span<const AlphaSeries> replicas, const FitWindow& window)
{
    std::vector<double> rates;
    if (replicas.size() >= kBlocks) {
        for (const auto& r : replicas) rates.push_back(msd_rate(r, window));
    } else if (replicas.size() == 1) {
        const auto& s = replicas.front();
        const std::size_t block = s.values.size() / kBlocks;
        require(block > 0 && s.sample_interval * static_cast<double>(block - 1) > window.t_max,
                "rate_from_msd: series too short to form 20 blocks longer than the fit window");
        for (std::size_t b = 0; b < kBlocks; ++b) rates.push_back(msd_rate(slice(s, b * block, block), window));
    } else {
        throw PreconditionError("rate_from_msd: need at least 20 replicas or a single series to block");
    }
    const auto est = mean_with_stderr(rates);
    return {est.mean, est.standard_error, RateMethod::Msd};
}

double green_kubo_rate(std::span<const double> increments, double dt, double cutoff)
{
    require(dt > 0, "green_kubo_rate: dt must be positive");
    require(cutoff >= 0, "green_kubo_rate: cutoff must be non-negative");
    const auto lags = static_cast<std::size_t>(std::floor(cutoff / dt + 1e-9));
    const std::size_t n = increments.size();
    require(lags < n, "green_kubo_rate: cutoff exceeds the series length");

    double integral = 0;
    for (std::size_t k = 0; k <= lags; ++k) {
        double sum = 0;
        for (std::size_t i = 0; i + k < n; ++i) sum += increments[i] * increments[i + k];
        const double c = sum / static_cast<double>(n - k) / (dt * dt);
        integral += (k == 0 ? 1.0 : 2.0) * c;
    }
    return 0.5 * dt * integral;
}

RateEstimate rate_from_green_kubo(std::span<const double> incs, double dt, double cutoff)
{
    require(dt > 0, "rate_from_green_kubo: dt must be positive");
    const auto lags = static_cast<std::size_t>(std::floor(cutoff / dt + 1e-9));
    require(lags < incs.size(), "rate_from_green_kubo: cutoff exceeds the series length");
    const double point = green_kubo_rate(incs, dt, cutoff);

    const std::size_t blocks = std::min(kBlocks, incs.size() / (2 * (lags + 1)));
    require(blocks >= 2, "rate_from_green_kubo: series too short for a block error estimate");
    const std::size_t block = incs.size() / blocks;
    std::vector<double> rates;
    for (std::size_t b = 0; b < blocks; ++b) rates.push_back(green_kubo_rate(incs.subspan(b * block, block), dt, cutoff));
    return {point, mean_with_stderr(rates).standard_error, RateMethod::GreenKubo};
}

RateEstimate rate_from_green_kubo(std::span<const AlphaSeries> replicas, double cutoff)
{
    require(!replicas.empty(), "rate_from_green_kubo: no replicas");
    if (replicas.size() == 1) {
        const auto incs = increments(replicas.front());
        return rate_from_green_kubo(incs, replicas.front().sample_interval, cutoff);
    }
    std::vector<double> rates;
    for (const auto& r : replicas) rates.push_back(green_kubo_rate(increments(r), r.sample_interval, cutoff));
    const auto est = mean_with_stderr(rates);
    return {est.mean, est.standard_error, RateMethod::GreenKubo};
}

RateEstimate analytic_rate(const ThermalEnv& env, const TorusGeometry& geometry, double total_count, Axis axis)
{
    require(total_count >= 0, "analytic_rate: counts must be non-negative");
    const double length = geometry.crossing_length(axis);
    return {env.temperature * total_count / (env.eta * length * length), 0, RateMethod::Analytic};
}

RateEstimate analytic_rate(const ThermalEnv& env, const TorusGeometry& geometry, int n_vortices,
                           int n_antivortices, Axis axis)
{
    require(n_vortices >= 0 && n_antivortices >= 0, "analytic_rate: counts must be non-negative");
    return analytic_rate(env, geometry, static_cast<double>(n_vortices + n_antivortices), axis);
}

PredictedRate predicted_rate(const ThermalEnv& env, const TorusGeometry& geometry, double f0, Axis axis)
{
    require(f0 >= 0, "predicted_rate: f0 must be non-negative");
    const double aspect = axis == Axis::X ? geometry.l_x / geometry.l_y : geometry.l_y / geometry.l_x;
    const double t = env.temperature;
    const double boltzmann = t > 0 ? std::exp(-f0 / t) : 0.0;
    PredictedRate out;
    out.rate = {env.mass * t * t / (kPi * env.eta) * aspect * boltzmann, 0, RateMethod::Predicted};
    out.storage_time =
        out.rate.gamma_rate > 0 ? 1 / out.rate.gamma_rate : std::numeric_limits<double>::infinity();
    return out;
}

std::vector<double> increments(const AlphaSeries& series)
{
    std::vector<double> out;
    if (series.values.size() < 2) return out;
    out.reserve(series.values.size() - 1);
    for (std::size_t i = 1; i < series.values.size(); ++i) out.push_back(series.values[i] - series.values[i - 1]);
    return out;
}

}  // namespace windrift
