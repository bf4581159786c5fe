#include "windrift/langevin.hpp"

#include "windrift/correlation.hpp"
#include "windrift/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace windrift {

namespace {

// 2h - 3 + 4 e^{-h} - e^{-2h}, accurate for small h where the terms cancel.
double position_variance_factor(double h)
{
    if (h >= 0.1) return 2 * h - 3 + 4 * std::exp(-h) - std::exp(-2 * h);
    // sum_{k>=3} (4 - 2^k) (-h)^k / k!
    double sum = 0;
    double term = 1;  // (-h)^k / k!
    double pow2 = 1;
    for (int k = 1; k <= 25; ++k) {
        term *= -h / k;
        pow2 *= 2;
        if (k >= 3) sum += (4 - pow2) * term;
    }
    return sum;
}

}  // namespace

ThermalEnv::ThermalEnv(double mass_, double eta_, double temperature_)
    : mass(mass_), eta(eta_), temperature(temperature_)
{
    require(mass > 0, "mass must be positive");
    require(eta > 0, "eta must be positive");
    require(temperature >= 0, "temperature must be non-negative");
}

OuPropagator::OuPropagator(double dt, const ThermalEnv& env) : dt_(dt)
{
    require(dt > 0, "dt must be positive");
    const double gamma = env.gamma();
    const double h = gamma * dt;
    const double var_v0 = env.velocity_variance();
    const double em1 = std::expm1(-h);  // e^{-h} - 1

    decay_ = std::exp(-h);
    drift_ = -em1 / gamma;
    const double var_v = -var_v0 * std::expm1(-2 * h);
    sv_ = std::sqrt(var_v);
    cov_ = var_v0 / gamma * em1 * em1;
    var_x_ = var_v0 / (gamma * gamma) * position_variance_factor(h);
    if (sv_ > 0) {
        x_from_n1_ = cov_ / sv_;
        x_from_n2_ = std::sqrt(std::max(0.0, var_x_ - cov_ * cov_ / var_v));
    } else {
        x_from_n1_ = 0;
        x_from_n2_ = 0;
    }
}

void OuPropagator::advance(Walker& w, const Eigen::Vector4d& noise) const
{
    const Vec2 n1(noise[0], noise[2]);
    const Vec2 n2(noise[1], noise[3]);
    w.pos += drift_ * w.vel + x_from_n1_ * n1 + x_from_n2_ * n2;
    w.vel = decay_ * w.vel + sv_ * n1;
}

Walker step_walker(const Walker& w, double dt, const ThermalEnv& env, const Eigen::Vector4d& noise)
{
    Walker next = w;
    OuPropagator(dt, env).advance(next, noise);
    return next;
}

std::vector<FreeWalkerRecord> simulate_free_walkers(const FreeRunConfig& config, int n_walkers, int lanes)
{
    require(n_walkers >= 1, "simulate_free_walkers: need at least one walker");
    const OuPropagator propagator(config.dt, config.env);
    std::vector<FreeWalkerRecord> records(static_cast<std::size_t>(n_walkers));

    parallel_for(static_cast<std::size_t>(n_walkers), lanes, [&](std::size_t i) {
        const RandomStream stream(config.master_seed, config.replica, static_cast<std::uint32_t>(i));
        FreeWalkerRecord& rec = records[i];
        Walker w;
        std::uint64_t step = 0;
        for (; step < config.burn_in_steps; ++step) propagator.advance(w, stream.normal4(step));

        if (config.velocity_stride > 0) rec.vy_series.reserve(config.steps / config.velocity_stride + 1);
        if (config.position_stride > 0) {
            rec.positions.reserve(config.steps / config.position_stride + 1);
            rec.positions.push_back(w.pos);
        }
        Vec2 sum = Vec2::Zero(), sum2 = Vec2::Zero();
        for (std::uint64_t k = 1; k <= config.steps; ++k, ++step) {
            propagator.advance(w, stream.normal4(step));
            sum += w.vel;
            sum2 += w.vel.cwiseAbs2();
            if (config.velocity_stride > 0 && k % config.velocity_stride == 0) rec.vy_series.push_back(w.vel.y());
            if (config.position_stride > 0 && k % config.position_stride == 0) rec.positions.push_back(w.pos);
        }
        rec.samples = config.steps;
        if (config.steps > 0) {
            rec.mean_vel = sum / static_cast<double>(config.steps);
            rec.mean_vel2 = sum2 / static_cast<double>(config.steps);
        }
    });
    return records;
}

DiffusionCheck einstein_diffusion_check(const Trajectory& trajectory, const ThermalEnv& env)
{
    require(trajectory.sample_interval > 0, "einstein_diffusion_check: sample_interval must be positive");
    require(!trajectory.walkers.empty(), "einstein_diffusion_check: empty trajectory");
    const std::size_t n = trajectory.walkers.front().size();
    for (const auto& w : trajectory.walkers)
        require(w.size() == n, "einstein_diffusion_check: walkers have unequal sample counts");
    require(n >= 2, "einstein_diffusion_check: need at least two samples");

    const double gamma = env.gamma();
    const double dt = trajectory.sample_interval;
    const double duration = dt * static_cast<double>(n - 1);
    require(duration >= 10 / gamma, "einstein_diffusion_check: duration must be at least 10/gamma");

    const double t_max = std::min(duration / 4, 50 / gamma);
    const double t_min = std::min(10 / gamma, t_max / 2);
    const auto k_min = static_cast<std::size_t>(std::ceil(t_min / dt));
    const auto k_max = static_cast<std::size_t>(std::floor(t_max / dt));
    require(k_max > k_min, "einstein_diffusion_check: trajectory too coarsely sampled for the fit window");

    std::vector<std::size_t> lags;
    const std::size_t count = std::min<std::size_t>(24, k_max - k_min + 1);
    for (std::size_t j = 0; j < count; ++j) {
        const std::size_t k = k_min + (k_max - k_min) * j / (count - 1);
        if (lags.empty() || lags.back() != k) lags.push_back(k);
    }
    std::vector<double> lag_times;
    for (std::size_t k : lags) lag_times.push_back(dt * static_cast<double>(k));

    std::vector<double> per_walker;
    LineFit last_fit;
    for (const auto& w : trajectory.walkers) {
        std::vector<double> msd;
        for (std::size_t k : lags) {
            double sum = 0;
            for (std::size_t i = 0; i + k < n; ++i) sum += (w[i + k] - w[i]).squaredNorm();
            msd.push_back(sum / (2.0 * static_cast<double>(n - k)));  // per coordinate
        }
        last_fit = fit_line(lag_times, msd);
        per_walker.push_back(last_fit.slope / 2);
    }

    DiffusionCheck check;
    const auto est = mean_with_stderr(per_walker);
    check.d_measured = est.mean;
    check.d_stderr = per_walker.size() > 1 ? est.standard_error : last_fit.slope_stderr / 2;
    check.d_expected = env.diffusion();
    check.window_min = lag_times.front();
    check.window_max = lag_times.back();
    if (check.d_expected > 0) {
        check.ratio = check.d_measured / check.d_expected;
        check.ratio_stderr = check.d_stderr / check.d_expected;
    } else {
        check.ratio = std::numeric_limits<double>::quiet_NaN();
    }
    return check;
}

}  // namespace windrift
