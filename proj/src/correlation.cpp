#include "windrift/correlation.hpp"

#include "windrift/core.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numeric>

namespace windrift {

namespace {

void accumulate_lag_products(std::span<const double> x, std::size_t max_lag, std::vector<double>& out)
{
    const std::size_t n = x.size();
    for (std::size_t k = 0; k <= max_lag; ++k) {
        double sum = 0;
        for (std::size_t i = 0; i + k < n; ++i) sum += x[i] * x[i + k];
        out[k] += sum / static_cast<double>(n - k);
    }
}

}  // namespace

Autocorrelation autocorrelation(std::span<const double> series, double dt, std::size_t max_lag)
{
    require(dt > 0, "autocorrelation: dt must be positive");
    require(series.size() >= 10 * std::max<std::size_t>(max_lag, 1),
            "autocorrelation: series too short (need length >= 10 * max_lag)");
    Autocorrelation acf{dt, std::vector<double>(max_lag + 1, 0.0)};
    accumulate_lag_products(series, max_lag, acf.values);
    return acf;
}

Autocorrelation autocorrelation(std::span<const std::vector<double>> series, double dt, std::size_t max_lag)
{
    require(dt > 0, "autocorrelation: dt must be positive");
    require(!series.empty(), "autocorrelation: no series given");
    Autocorrelation acf{dt, std::vector<double>(max_lag + 1, 0.0)};
    for (const auto& s : series) {
        require(s.size() >= 10 * std::max<std::size_t>(max_lag, 1),
                "autocorrelation: series too short (need length >= 10 * max_lag)");
        accumulate_lag_products(s, max_lag, acf.values);
    }
    for (double& c : acf.values) c /= static_cast<double>(series.size());
    return acf;
}

ExponentialFit fit_exponential(const Autocorrelation& acf, double window_decay)
{
    require(!acf.values.empty(), "fit_exponential: empty autocorrelation");
    require(acf.values[0] > 0, "fit_exponential: C(0) must be positive");
    require(window_decay > 0, "fit_exponential: window_decay must be positive");

    const double floor = acf.values[0] * std::exp(-window_decay);
    std::size_t n = 1;
    while (n < acf.values.size() && acf.values[n] > floor) ++n;

    ExponentialFit fit;
    fit.points = n;
    if (n < 2) {
        fit.amplitude = acf.values[0];
        fit.decay_rate = window_decay / acf.dt;
        return fit;
    }

    Eigen::MatrixXd design(n, 2);
    Eigen::VectorXd target(n), weight(n);
    for (std::size_t k = 0; k < n; ++k) {
        const auto i = static_cast<Eigen::Index>(k);
        design(i, 0) = 1;
        design(i, 1) = -acf.lag_time(k);
        target(i) = std::log(acf.values[k]);
        weight(i) = acf.values[k] * acf.values[k];
    }
    const Eigen::VectorXd sqrt_w = weight.cwiseSqrt();
    const Eigen::MatrixXd a = sqrt_w.asDiagonal() * design;
    const Eigen::VectorXd b = sqrt_w.cwiseProduct(target);
    const Eigen::Vector2d beta = a.colPivHouseholderQr().solve(b);

    fit.amplitude = std::exp(beta(0));
    fit.decay_rate = beta(1);
    fit.resolved = true;
    if (n > 2) {
        const double s2 = (a * beta - b).squaredNorm() / static_cast<double>(n - 2);
        const Eigen::Matrix2d cov = s2 * (a.transpose() * a).inverse();
        fit.amplitude_stderr = fit.amplitude * std::sqrt(cov(0, 0));
        fit.decay_rate_stderr = std::sqrt(cov(1, 1));
    }
    return fit;
}

LineFit fit_line(std::span<const double> x, std::span<const double> y)
{
    require(x.size() == y.size(), "fit_line: x and y differ in length");
    require(x.size() >= 2, "fit_line: need at least two points");
    const auto n = static_cast<Eigen::Index>(x.size());
    Eigen::MatrixXd design(n, 2);
    Eigen::VectorXd target(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        design(i, 0) = 1;
        design(i, 1) = x[static_cast<std::size_t>(i)];
        target(i) = y[static_cast<std::size_t>(i)];
    }
    const Eigen::Vector2d beta = design.colPivHouseholderQr().solve(target);
    LineFit fit{beta(0), beta(1), 0};
    if (n > 2) {
        const double s2 = (design * beta - target).squaredNorm() / static_cast<double>(n - 2);
        fit.slope_stderr = std::sqrt(s2 * (design.transpose() * design).inverse()(1, 1));
    }
    return fit;
}

MeanEstimate mean_with_stderr(std::span<const double> values)
{
    require(!values.empty(), "mean_with_stderr: no values");
    const double n = static_cast<double>(values.size());
    const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
    if (values.size() < 2) return {mean, 0};
    double ss = 0;
    for (double v : values) ss += (v - mean) * (v - mean);
    return {mean, std::sqrt(ss / (n - 1) / n)};
}

}  // namespace windrift
