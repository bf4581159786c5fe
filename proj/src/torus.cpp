#include "windrift/torus.hpp"

#include "windrift/parallel.hpp"

#include <cmath>
#include <random>

namespace windrift {

namespace {

double wrap(double x, double length)
{
    double w = x - length * std::floor(x / length);
    if (w >= length) w = 0;  // rounding just below a multiple of length
    return w;
}

}  // namespace

TorusGeometry::TorusGeometry(double l_x_, double l_y_, double d_) : l_x(l_x_), l_y(l_y_), d(d_)
{
    require(l_y > 0, "l_y must be positive");
    require(l_x >= l_y, "l_x must be at least l_y");
    require(d > 0, "d must be positive");
}

SimulationState::SimulationState(TorusGeometry geometry, std::vector<Walker> walkers, SeedDescriptor seed)
    : geometry_(geometry), walkers_(std::move(walkers)), seed_(seed)
{
    for (const auto& w : walkers_) require(w.charge == 1 || w.charge == -1, "walker charge must be +1 or -1");
    require(net_charge() == 0, "ensemble must be vorticity neutral");
}

int SimulationState::net_charge() const
{
    int sum = 0;
    for (const auto& w : walkers_) sum += w.charge;
    return sum;
}

void step_ensemble(SimulationState& state, const OuPropagator& propagator)
{
    const double l_x = state.geometry_.l_x;
    const double l_y = state.geometry_.l_y;
    double dx_sum = 0, dy_sum = 0;
    for (std::size_t i = 0; i < state.walkers_.size(); ++i) {
        Walker& w = state.walkers_[i];
        const RandomStream stream(state.seed_.master_seed, state.seed_.replica, static_cast<std::uint32_t>(i));
        const Vec2 before = w.pos;
        propagator.advance(w, stream.normal4(state.steps_));
        const Vec2 delta = w.pos - before;
        dx_sum += w.charge * delta.x();
        dy_sum += w.charge * delta.y();
        w.pos = Vec2(wrap(w.pos.x(), l_x), wrap(w.pos.y(), l_y));
    }
    state.alpha_x_ += dy_sum / l_y;
    state.alpha_y_ += dx_sum / l_x;
    state.time_ += propagator.dt();
    ++state.steps_;
}

void step_ensemble(SimulationState& state, double dt, const ThermalEnv& env)
{
    step_ensemble(state, OuPropagator(dt, env));
}

double mean_population(const ThermalEnv& env, const TorusGeometry& geometry, double f0)
{
    require(f0 >= 0, "f0 must be non-negative");
    require(env.temperature > 0, "temperature must be positive for a thermal population");
    return geometry.area() / kPi * std::exp(-f0 / env.temperature) * env.mass * env.temperature;
}

Population sample_population(const ThermalEnv& env, const TorusGeometry& geometry, double f0,
                             const RandomStream& stream)
{
    Population pop;
    pop.mean_total = mean_population(env, geometry, f0);
    if (pop.mean_total < 2) {
        pop.empty = true;
        return pop;
    }
    StreamEngine engine(stream);
    std::poisson_distribution<std::int64_t> poisson(pop.mean_total);
    pop.drawn_total = poisson(engine);
    const auto half = static_cast<int>(std::nearbyint(static_cast<double>(pop.drawn_total) / 2));
    pop.n_vortices = half;
    pop.n_antivortices = half;
    return pop;
}

std::vector<Walker> equilibrium_walkers(const ThermalEnv& env, const TorusGeometry& geometry, int n_vortices,
                                        int n_antivortices, const SeedDescriptor& seed)
{
    require(n_vortices >= 0 && n_antivortices >= 0, "walker counts must be non-negative");
    const double sd = std::sqrt(env.velocity_variance());
    std::vector<Walker> walkers;
    walkers.reserve(static_cast<std::size_t>(n_vortices + n_antivortices));
    for (int i = 0; i < n_vortices + n_antivortices; ++i) {
        const RandomStream stream(seed.master_seed, seed.replica, static_cast<std::uint32_t>(i),
                                  StreamPurpose::InitialState);
        const auto u = stream.uniform2(0);
        const auto n = stream.normal2(1);
        Walker w;
        w.pos = Vec2(u[0] * geometry.l_x, u[1] * geometry.l_y);
        w.vel = sd * Vec2(n[0], n[1]);
        w.charge = i < n_vortices ? 1 : -1;
        walkers.push_back(w);
    }
    return walkers;
}

Eigen::Vector2d winding_of_vacuum(int n_x, int n_y, const TorusGeometry& geometry, int grid, double g)
{
    require(grid >= 2, "winding_of_vacuum: grid must have at least 2 points per axis");
    require(g > 0, "winding_of_vacuum: g must be positive");
    const double hx = geometry.l_x / grid, hy = geometry.l_y / grid, hz = geometry.d / grid;

    // Vacuum gauge field A = (2 pi / g) (n_x e_x / L_x + n_y e_y / L_y) on one z-layer;
    // it does not vary across layers.
    const Eigen::ArrayXXd a_x = Eigen::ArrayXXd::Constant(grid, grid, 2 * kPi * n_x / (g * geometry.l_x));
    const Eigen::ArrayXXd a_y = Eigen::ArrayXXd::Constant(grid, grid, 2 * kPi * n_y / (g * geometry.l_y));
    double int_x = 0, int_y = 0;
    for (int layer = 0; layer < grid; ++layer) {
        int_x += a_x.sum() * hx * hy * hz;
        int_y += a_y.sum() * hx * hy * hz;
    }
    return {g / (2 * kPi * geometry.l_y * geometry.d) * int_x, g / (2 * kPi * geometry.l_x * geometry.d) * int_y};
}

void EnsembleConfig::validate() const
{
    require(dt > 0, "dt must be positive");
    require(total_time >= dt, "total_time must cover at least one step");
    require(sample_stride >= 1, "sample_stride must be at least 1");
    require(replicas >= 1, "replicas must be at least 1");
    require(n_vortices.has_value() == n_antivortices.has_value(),
            "n_vortices and n_antivortices must be given together");
    if (n_vortices) {
        require(*n_vortices >= 0 && *n_antivortices >= 0, "vortex counts must be non-negative");
        require(*n_vortices == *n_antivortices, "vortex counts must be equal (zero net vorticity)");
    } else {
        require(f0 >= 0, "f0 must be non-negative");
        require(env.temperature > 0, "temperature must be positive to sample a population");
    }
}

std::uint64_t EnsembleConfig::total_steps() const
{
    return static_cast<std::uint64_t>(std::llround(total_time / dt));
}

ReplicaRun run_replica(const EnsembleConfig& config, std::uint32_t replica)
{
    config.validate();
    const SeedDescriptor seed{config.master_seed, replica};

    ReplicaRun run;
    run.replica = replica;
    if (config.n_vortices) {
        run.population.n_vortices = *config.n_vortices;
        run.population.n_antivortices = *config.n_antivortices;
        run.population.drawn_total = *config.n_vortices + *config.n_antivortices;
        run.population.mean_total = static_cast<double>(run.population.drawn_total);
    } else {
        run.population = sample_population(config.env, config.geometry, config.f0,
                                           RandomStream(config.master_seed, replica, 0, StreamPurpose::Population));
    }

    SimulationState state(config.geometry,
                          equilibrium_walkers(config.env, config.geometry, run.population.n_vortices,
                                              run.population.n_antivortices, seed),
                          seed);
    const OuPropagator propagator(config.dt, config.env);
    const std::uint64_t steps = config.total_steps();
    const double interval = config.dt * static_cast<double>(config.sample_stride);
    run.alpha_x.sample_interval = interval;
    run.alpha_y.sample_interval = interval;
    run.alpha_x.values.reserve(steps / config.sample_stride + 1);
    run.alpha_y.values.reserve(steps / config.sample_stride + 1);
    run.alpha_x.values.push_back(0);
    run.alpha_y.values.push_back(0);
    for (std::uint64_t k = 1; k <= steps; ++k) {
        step_ensemble(state, propagator);
        if (k % config.sample_stride == 0) {
            run.alpha_x.values.push_back(state.alpha_x());
            run.alpha_y.values.push_back(state.alpha_y());
        }
    }
    return run;
}

std::vector<ReplicaRun> run_ensemble(const EnsembleConfig& config, int lanes)
{
    config.validate();
    std::vector<ReplicaRun> runs(static_cast<std::size_t>(config.replicas));
    parallel_for(runs.size(), lanes,
                 [&](std::size_t r) { runs[r] = run_replica(config, static_cast<std::uint32_t>(r)); });
    return runs;
}

}  // namespace windrift
