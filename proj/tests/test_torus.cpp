#include "doctest.h"

#include "windrift/torus.hpp"

#include <cmath>

using namespace windrift;

namespace {

// T = 0 walkers with initial velocity v move exactly v (1 - e^{-g dt}) / g.
Walker mover(Vec2 pos, Vec2 displacement, int charge, double gamma_dt)
{
    Walker w;
    w.pos = pos;
    w.vel = displacement / (1 - std::exp(-gamma_dt));
    w.charge = charge;
    return w;
}

}  // namespace

TEST_CASE("Boltzmann mean population")
{
    const ThermalEnv env(1, 1, 1);
    const TorusGeometry geom(std::sqrt(kPi), std::sqrt(kPi));
    CHECK(mean_population(env, geom, 0) == doctest::Approx(1).epsilon(1e-14));
    CHECK(mean_population(env, TorusGeometry(10, 10), 1e6) == 0.0);
}

TEST_CASE("population sampling")
{
    const ThermalEnv env(1, 1, 1);
    const TorusGeometry geom(20, 20);
    const RandomStream stream(3, 0, 0, StreamPurpose::Population);
    const auto empty = sample_population(env, geom, 1e3, stream);
    CHECK(empty.empty);
    CHECK(empty.total() == 0);

    const double f0 = std::log(4 / kPi);  // mean total 100
    const auto pop = sample_population(env, geom, f0, stream);
    CHECK(pop.mean_total == doctest::Approx(100).epsilon(1e-13));
    CHECK(pop.n_vortices == pop.n_antivortices);
    CHECK(std::abs(pop.total() - pop.drawn_total) <= 1);
    CHECK(pop.total() % 2 == 0);
    CHECK(sample_population(env, geom, f0, stream).drawn_total == pop.drawn_total);

    double sum = 0;
    for (std::uint32_t r = 0; r < 400; ++r)
        sum += static_cast<double>(
            sample_population(env, geom, f0, RandomStream(3, r, 0, StreamPurpose::Population)).drawn_total);
    const double mean = pop.mean_total;
    CHECK(std::abs(sum / 400 - mean) < 4 * std::sqrt(mean / 400));
}

TEST_CASE("winding increments follow the charge-weighted displacement")
{
    const ThermalEnv frozen(1, 1, 0);
    const TorusGeometry geom(8, 4);
    const SeedDescriptor seed{1, 0};

    SUBCASE("vortex crossing the full height")
    {
        std::vector<Walker> w{mover(Vec2(1, 1), Vec2(0, 4), 1, 1), mover(Vec2(5, 1), Vec2::Zero(), -1, 1)};
        SimulationState state(geom, w, seed);
        step_ensemble(state, 1.0, frozen);
        CHECK(state.alpha_x() == doctest::Approx(1).epsilon(1e-12));
        CHECK(state.alpha_y() == doctest::Approx(0).epsilon(1e-12));
        CHECK(state.walkers()[0].pos.y() == doctest::Approx(1).epsilon(1e-12));
        CHECK(state.step_count() == 1);
        CHECK(state.time() == doctest::Approx(1.0));
    }
    SUBCASE("antivortex moving half the height")
    {
        std::vector<Walker> w{mover(Vec2(1, 1), Vec2::Zero(), 1, 1), mover(Vec2(5, 3), Vec2(0, 2), -1, 1)};
        SimulationState state(geom, w, seed);
        step_ensemble(state, 1.0, frozen);
        CHECK(state.alpha_x() == doctest::Approx(-0.5).epsilon(1e-12));
        CHECK(state.walkers()[1].pos.y() == doctest::Approx(1).epsilon(1e-12));
    }
    SUBCASE("pair moving together cancels")
    {
        std::vector<Walker> w{mover(Vec2(1, 1), Vec2(3, 2.5), 1, 1), mover(Vec2(5, 3), Vec2(3, 2.5), -1, 1)};
        SimulationState state(geom, w, seed);
        step_ensemble(state, 1.0, frozen);
        CHECK(state.alpha_x() == doctest::Approx(0).epsilon(1e-12));
        CHECK(state.alpha_y() == doctest::Approx(0).epsilon(1e-12));
    }
    SUBCASE("horizontal crossing changes alpha_y")
    {
        std::vector<Walker> w{mover(Vec2(7, 1), Vec2(-8, 0), 1, 1), mover(Vec2(5, 3), Vec2::Zero(), -1, 1)};
        SimulationState state(geom, w, seed);
        step_ensemble(state, 1.0, frozen);
        CHECK(state.alpha_y() == doctest::Approx(-1).epsilon(1e-12));
    }
}

TEST_CASE("ensembles must be neutral")
{
    std::vector<Walker> w(1);
    CHECK_THROWS_AS(SimulationState(TorusGeometry(2, 1), w, {}), PreconditionError);
    CHECK_THROWS_AS(TorusGeometry(1, 2), PreconditionError);
}

TEST_CASE("equilibrium walkers")
{
    const ThermalEnv env(2, 1, 4);
    const TorusGeometry geom(6, 3);
    const auto w = equilibrium_walkers(env, geom, 500, 500, {7, 2});
    REQUIRE(w.size() == 1000);
    double v2 = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        CHECK(w[i].charge == (i < 500 ? 1 : -1));
        CHECK(w[i].pos.x() >= 0);
        CHECK(w[i].pos.x() < 6);
        CHECK(w[i].pos.y() >= 0);
        CHECK(w[i].pos.y() < 3);
        v2 += w[i].vel.squaredNorm();
    }
    CHECK(v2 / 2000 == doctest::Approx(2).epsilon(0.15));
}

TEST_CASE("vacuum windings reproduce the integers")
{
    const TorusGeometry geom(5, 2, 0.3);
    for (auto [nx, ny] : {std::pair{0, 0}, std::pair{1, 0}, std::pair{3, -2}}) {
        const auto w = winding_of_vacuum(nx, ny, geom, 16, 0.7);
        CHECK(w.x() == doctest::Approx(nx).epsilon(1e-12));
        CHECK(w.y() == doctest::Approx(ny).epsilon(1e-12));
    }
}

TEST_CASE("ensemble runs are lane independent and start at zero")
{
    EnsembleConfig cfg;
    cfg.env = ThermalEnv(1, 2, 1);
    cfg.geometry = TorusGeometry(5, 5);
    cfg.n_vortices = 3;
    cfg.n_antivortices = 3;
    cfg.dt = 0.1;
    cfg.total_time = 20;
    cfg.sample_stride = 4;
    cfg.replicas = 5;
    cfg.master_seed = 99;
    const auto a = run_ensemble(cfg, 1);
    const auto b = run_ensemble(cfg, 4);
    REQUIRE(a.size() == 5);
    for (std::size_t r = 0; r < a.size(); ++r) {
        CHECK(a[r].alpha_x.values.size() == 51);
        CHECK(a[r].alpha_x.values.front() == 0.0);
        CHECK(a[r].alpha_x.sample_interval == doctest::Approx(0.4));
        CHECK(a[r].alpha_x.values == b[r].alpha_x.values);
        CHECK(a[r].alpha_y.values == b[r].alpha_y.values);
    }
    CHECK(a[0].alpha_x.values != a[1].alpha_x.values);
}
