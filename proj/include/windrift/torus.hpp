#pragma once

// Non-interacting vortices and antivortices diffusing on a periodic film,
// with unwrapped winding accumulators alpha_x, alpha_y.

#include "windrift/core.hpp"
#include "windrift/langevin.hpp"
#include "windrift/random.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace windrift {

struct TorusGeometry {
    double l_x = 1;
    double l_y = 1;
    double d = 1;  ///< film thickness

    TorusGeometry() = default;
    TorusGeometry(double l_x, double l_y, double d = 1);

    double area() const { return l_x * l_y; }
    /// Circumference crossed by the vortices whose motion changes the winding
    /// along `axis`: l_y for alpha_x, l_x for alpha_y.
    double crossing_length(Axis axis) const { return axis == Axis::X ? l_y : l_x; }
};

struct SeedDescriptor {
    std::uint64_t master_seed = 0;
    std::uint32_t replica = 0;
};

class SimulationState {
public:
    /// Requires zero net charge.
    SimulationState(TorusGeometry geometry, std::vector<Walker> walkers, SeedDescriptor seed);

    const TorusGeometry& geometry() const { return geometry_; }
    const std::vector<Walker>& walkers() const { return walkers_; }
    const SeedDescriptor& seed() const { return seed_; }
    double time() const { return time_; }
    std::uint64_t step_count() const { return steps_; }
    double alpha_x() const { return alpha_x_; }
    double alpha_y() const { return alpha_y_; }
    int net_charge() const;

private:
    friend void step_ensemble(SimulationState& state, const OuPropagator& propagator);

    TorusGeometry geometry_;
    std::vector<Walker> walkers_;
    SeedDescriptor seed_;
    double time_ = 0;
    std::uint64_t steps_ = 0;
    double alpha_x_ = 0;
    double alpha_y_ = 0;
};

/// Advances every walker by one exact Langevin step, wraps positions into
/// [0, l_x) x [0, l_y) and adds the pre-wrap displacements to the windings:
/// alpha_x += sum charge dy / l_y, alpha_y += sum charge dx / l_x.
/// Walker i draws its noise from stream (seed, replica, i) at counter = step.
void step_ensemble(SimulationState& state, const OuPropagator& propagator);
void step_ensemble(SimulationState& state, double dt, const ThermalEnv& env);

/// Equilibrium vortex+antivortex count (V / pi) e^{-F0/T} M T.
double mean_population(const ThermalEnv& env, const TorusGeometry& geometry, double f0);

struct Population {
    int n_vortices = 0;
    int n_antivortices = 0;
    double mean_total = 0;
    std::int64_t drawn_total = 0;  ///< raw Poisson draw before the even split
    bool empty = false;            ///< mean_total < 2

    int total() const { return n_vortices + n_antivortices; }
};

/// Poisson total with mean `mean_population`, split evenly; an odd draw is
/// rounded to an even total with ties-to-even on total/2.
Population sample_population(const ThermalEnv& env, const TorusGeometry& geometry, double f0,
                             const RandomStream& stream);

/// Walkers uniformly placed with Maxwellian velocities (variance T/M per axis),
/// vortices first. Uses the InitialState purpose of (seed, replica, i).
std::vector<Walker> equilibrium_walkers(const ThermalEnv& env, const TorusGeometry& geometry, int n_vortices,
                                        int n_antivortices, const SeedDescriptor& seed);

/// Numerical volume integrals of the classical vacuum gauge field on a grid
/// with `grid` cells per axis. `g` cancels in the result.
Eigen::Vector2d winding_of_vacuum(int n_x, int n_y, const TorusGeometry& geometry, int grid, double g = 1);

/// Uniformly sampled winding number time series.
struct AlphaSeries {
    double sample_interval = 0;
    std::vector<double> values;
};

struct EnsembleConfig {
    ThermalEnv env;
    TorusGeometry geometry;
    /// Fixed counts when set; otherwise drawn per replica from f0.
    std::optional<int> n_vortices;
    std::optional<int> n_antivortices;
    double f0 = 0;
    double dt = 0.1;
    double total_time = 100;
    std::uint64_t sample_stride = 1;  ///< steps between recorded samples
    std::uint64_t master_seed = 0;
    int replicas = 20;

    void validate() const;
    std::uint64_t total_steps() const;
};

struct ReplicaRun {
    std::uint32_t replica = 0;
    Population population;
    AlphaSeries alpha_x;
    AlphaSeries alpha_y;
};

/// Runs one replica from equilibrium initial conditions.
ReplicaRun run_replica(const EnsembleConfig& config, std::uint32_t replica);

/// All replicas, returned in replica order; results do not depend on `lanes`.
std::vector<ReplicaRun> run_ensemble(const EnsembleConfig& config, int lanes = 1);

}  // namespace windrift
