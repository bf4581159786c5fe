#include "windrift/runner.hpp"

#include "windrift/bessel.hpp"
#include "windrift/correlation.hpp"
#include "windrift/vortex_fields.hpp"

#include "json.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

namespace windrift {

using nlohmann::ordered_json;

namespace {

ordered_json rate_json(const RateEstimate& r)
{
    return {{"method", to_string(r.method)}, {"gamma", r.gamma_rate}, {"stderr", r.standard_error}};
}

ordered_json axis_json(const AxisRates& a)
{
    ordered_json j;
    j["msd"] = rate_json(a.msd);
    j["green_kubo"] = rate_json(a.green_kubo);
    j["analytic"] = rate_json(a.analytic);
    if (a.predicted) {
        j["predicted"] = rate_json(a.predicted->rate);
        const double st = a.predicted->storage_time;
        j["predicted"]["storage_time"] = std::isfinite(st) ? ordered_json(st) : ordered_json(nullptr);
        j["predicted"]["storage_time_infinite"] = !std::isfinite(st);
    } else {
        j["predicted"] = nullptr;
    }
    return j;
}

ordered_json config_echo(const RunConfig& config)
{
    ordered_json j = ordered_json::object();
    for (const auto& [key, value] : config.entries)
        std::visit([&](const auto& v) { j[key] = v; }, value);
    return j;
}

void write_file(const std::filesystem::path& path, const std::string& contents)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << contents;
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

std::string dump(const ordered_json& j)
{
    return j.dump(2) + "\n";
}

double field_r_min(const RunConfig& c, const DerivedScales& s)
{
    return c.r_min.value_or(2 * s.xi);
}

double field_r_max(const RunConfig& c, const DerivedScales& s)
{
    return c.r_max.value_or(5 * s.delta);
}

}  // namespace

std::string format_number(double value)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

RatesResult compute_rates(const RunConfig& config, int lanes)
{
    require(config.subcommand == Subcommand::Rates || config.subcommand == Subcommand::Simulate,
            "compute_rates: config is not a simulation config");
    RatesResult result;
    RateSummary& s = result.summary;
    const EnsembleConfig ensemble = config.ensemble();
    result.runs = run_ensemble(ensemble, lanes);

    s.window = config.fit_window();
    s.green_kubo_cutoff = config.green_kubo_cutoff();
    if (config.has_f0 && config.env.temperature > 0)
        s.mean_population = mean_population(config.env, config.geometry, config.f0);

    std::vector<AlphaSeries> ax, ay;
    std::vector<double> analytic_x, analytic_y;
    double realized = 0;
    for (const auto& run : result.runs) {
        ax.push_back(run.alpha_x);
        ay.push_back(run.alpha_y);
        const auto& pop = run.population;
        ReplicaRecord rec;
        rec.replica = run.replica;
        rec.n_vortices = pop.n_vortices;
        rec.n_antivortices = pop.n_antivortices;
        rec.msd_x = msd_rate(run.alpha_x, s.window);
        rec.msd_y = msd_rate(run.alpha_y, s.window);
        rec.green_kubo_x = green_kubo_rate(increments(run.alpha_x), run.alpha_x.sample_interval, s.green_kubo_cutoff);
        rec.green_kubo_y = green_kubo_rate(increments(run.alpha_y), run.alpha_y.sample_interval, s.green_kubo_cutoff);
        rec.analytic_x = analytic_rate(config.env, config.geometry, pop.n_vortices, pop.n_antivortices, Axis::X).gamma_rate;
        rec.analytic_y = analytic_rate(config.env, config.geometry, pop.n_vortices, pop.n_antivortices, Axis::Y).gamma_rate;
        analytic_x.push_back(rec.analytic_x);
        analytic_y.push_back(rec.analytic_y);
        realized += pop.total();
        s.replicas.push_back(rec);
    }
    s.mean_realized_total = realized / static_cast<double>(result.runs.size());

    auto fill = [&](AxisRates& a, const std::vector<AlphaSeries>& series, const std::vector<double>& analytic, Axis axis) {
        a.msd = rate_from_msd(series, s.window);
        a.green_kubo = rate_from_green_kubo(series, s.green_kubo_cutoff);
        const auto est = mean_with_stderr(analytic);
        a.analytic = {est.mean, est.standard_error, RateMethod::Analytic};
        if (config.has_f0 && config.env.temperature > 0) a.predicted = predicted_rate(config.env, config.geometry, config.f0, axis);
    };
    fill(s.x, ax, analytic_x, Axis::X);
    fill(s.y, ay, analytic_y, Axis::Y);
    return result;
}

std::string summary_json(const RunConfig& config, const RateSummary& s)
{
    ordered_json j;
    j["tool"] = "windrift";
    j["subcommand"] = to_string(config.subcommand);
    j["master_seed"] = config.master_seed;
    j["config"] = config_echo(config);
    j["replicas"] = s.replicas.size();
    j["fit_window"] = {{"t_min", s.window.t_min}, {"t_max", s.window.t_max}};
    j["green_kubo_cutoff"] = s.green_kubo_cutoff;
    j["population"] = {{"boltzmann_mean_total", config.has_f0 ? ordered_json(s.mean_population) : ordered_json(nullptr)},
                       {"mean_realized_total", s.mean_realized_total}};
    j["rates"] = {{"x", axis_json(s.x)}, {"y", axis_json(s.y)}};
    return dump(j);
}

std::string replicas_csv(const RateSummary& s)
{
    std::string out = "replica,n_vortices,n_antivortices,gamma_msd_x,gamma_gk_x,gamma_analytic_x,gamma_msd_y,"
                      "gamma_gk_y,gamma_analytic_y\n";
    for (const auto& r : s.replicas) {
        out += std::to_string(r.replica) + ',' + std::to_string(r.n_vortices) + ',' + std::to_string(r.n_antivortices);
        for (double v : {r.msd_x, r.green_kubo_x, r.analytic_x, r.msd_y, r.green_kubo_y, r.analytic_y})
            out += ',' + format_number(v);
        out += '\n';
    }
    return out;
}

std::string trajectory_csv(const ReplicaRun& run)
{
    std::string out = "t,alpha_x,alpha_y\n";
    const double dt = run.alpha_x.sample_interval;
    for (std::size_t i = 0; i < run.alpha_x.values.size(); ++i) {
        out += format_number(dt * static_cast<double>(i)) + ',' + format_number(run.alpha_x.values[i]) + ',' +
               format_number(run.alpha_y.values[i]) + '\n';
    }
    return out;
}

std::string fields_csv(const RunConfig& config)
{
    require(config.material.has_value(), "fields: material parameters are required");
    const auto scales = derive_scales(*config.material);
    const auto rows = field_table(field_r_min(config, scales), field_r_max(config, scales), config.n_points,
                                  Vec2(1, 0), Vec2(0, config.speed), scales, scales.c_light);
    std::string out = "r,B,Ex,Ey,E2\n";
    for (const auto& row : rows) {
        out += format_number(row.r) + ',' + format_number(row.b) + ',' + format_number(row.e.x()) + ',' +
               format_number(row.e.y()) + ',' + format_number(row.e2) + '\n';
    }
    return out;
}

std::string fields_json(const RunConfig& config)
{
    require(config.material.has_value(), "fields: material parameters are required");
    const auto& m = *config.material;
    const auto s = derive_scales(m);
    const auto regime = classify_regime(m, s);

    ordered_json j;
    j["tool"] = "windrift";
    j["subcommand"] = "fields";
    j["config"] = config_echo(config);
    j["scales"] = {{"delta", s.delta},   {"xi", s.xi},     {"psi0", s.psi0},   {"kappa", s.kappa},
                   {"flux_quantum", s.flux_quantum},    {"h_c2", s.h_c2},    {"mass", s.mass},
                   {"eta", s.eta},       {"gamma", s.gamma}, {"label", "estimate"}};
    j["regime"] = {{"extreme_type_ii", to_string(regime.extreme_type_ii)},
                   {"dirty_limit", to_string(regime.dirty_limit)},
                   {"type_ii_ratio", regime.type_ii_ratio},
                   {"dirty_ratio", regime.dirty_ratio ? ordered_json(*regime.dirty_ratio) : ordered_json(nullptr)}};

    const auto energy = field_energy(s.xi, s.delta, config.speed, s, s.c_light, m.d_thickness);
    j["energy_integral"] = {{"r_min", energy.r_min},
                            {"r_max", energy.r_max},
                            {"energy", energy.energy},
                            {"mass_estimate", energy.mass_estimate},
                            {"viscosity_estimate", energy.viscosity_estimate},
                            {"mass_coefficient", energy.mass_coefficient},
                            {"label", "order-of-magnitude estimate"}};

    double worst = 0;
    const double r_lo = field_r_min(config, s), r_hi = field_r_max(config, s);
    for (const auto& row : field_table(r_lo, r_hi, config.n_points, Vec2(1, 0), Vec2(0, config.speed), s, s.c_light))
        worst = std::max(worst, helmholtz_residual(row.r, s, row.r / 1000) / std::abs(row.b));
    j["helmholtz_max_relative_residual"] = worst;
    return dump(j);
}

std::string design_json(const RunConfig& config)
{
    const DeviceSpec& d = config.device;
    const auto levels = level_splitting(d);

    ordered_json j;
    j["tool"] = "windrift";
    j["subcommand"] = "design";
    j["config"] = config_echo(config);
    j["level_splitting"] = {{"n1", d.n1},
                            {"n2", d.n2},
                            {"delta_n_squared", levels.delta_n2},
                            {"wavelength", levels.wavelength},
                            {"wavelength_m", levels.wavelength_m},
                            {"wavelength_mm", levels.wavelength_m * 1e3},
                            {"energy_j", levels.energy_j},
                            {"energy_ev", levels.energy_ev},
                            {"angular_frequency_rad_s", levels.angular_frequency},
                            {"label", "order-of-magnitude estimate"}};
    j["solid_torus"] = {{"barrier_energy", d.epsilon_line * d.l_y},
                        {"boltzmann_factor", solid_torus_suppression(d)},
                        {"label", "order-of-magnitude estimate"}};
    j["equivalence_classes"] = {{"n1", to_string(equivalence_class(d.n1, 0))},
                                {"n2", to_string(equivalence_class(d.n2, 0))}};
    if (config.material && d.l_x > d.l_y) {
        const auto s = derive_scales(*config.material);
        const auto loop = loop_current_scale(d.l_x, d.l_y, s.flux_quantum, s.c_light);
        j["loop_current"] = {{"inductance", loop.inductance},
                             {"current", loop.current},
                             {"log_clamped", loop.clamped},
                             {"label", "order-of-magnitude estimate"}};
    } else {
        j["loop_current"] = nullptr;
    }
    if (config.l_prime && config.rho_min)
        j["anyon_prefactor_log"] = anyon_prefactor_log(*config.l_prime, *config.rho_min);
    else
        j["anyon_prefactor_log"] = nullptr;
    return dump(j);
}

std::vector<SelfCheck> selftest()
{
    std::vector<SelfCheck> checks;
    auto add = [&](std::string name, bool ok, double value) {
        checks.push_back({std::move(name), ok, format_number(value)});
    };

    double worst = 0;
    for (double z : {1e-4, 0.3, 1.0, 2.0, 2.5, 7.0, 30.0}) {
        for (int n : {0, 1}) {
            const double ref = std::cyl_bessel_k(static_cast<double>(n), z);
            worst = std::max(worst, std::abs(bessel_k(n, z).value / ref - 1));
        }
    }
    add("bessel_k vs std::cyl_bessel_k", worst <= 1e-9, worst);

    const ThermalEnv env(1.5, 2.5, 0.7);
    const TorusGeometry geom(12, 8);
    const double mean = mean_population(env, geom, 0.4);
    const double analytic = analytic_rate(env, geom, mean, Axis::X).gamma_rate;
    const double predicted = predicted_rate(env, geom, 0.4, Axis::X).rate.gamma_rate;
    add("predicted rate equals analytic rate at the Boltzmann population", std::abs(analytic / predicted - 1) <= 1e-12,
        std::abs(analytic / predicted - 1));

    MaterialParams m;
    m.zeta = 0.5;
    m.a_coeff = 1;
    m.b_coeff = 50;
    m.g_coupling = 0.1;
    m.sigma = 1;
    m.d_thickness = 1;
    const auto s = derive_scales(m);
    const double res = helmholtz_residual(s.delta, s, s.delta / 1000) / static_cast<double>(static_b(s.delta, s));
    add("Helmholtz residual at r = delta", res <= 1e-4, res);

    const Eigen::Vector2d w = winding_of_vacuum(3, -2, TorusGeometry(3, 2, 0.5), 8);
    add("vacuum winding numbers (3, -2)", std::abs(w.x() - 3) <= 3e-10 && std::abs(w.y() + 2) <= 2e-10,
        std::max(std::abs(w.x() - 3), std::abs(w.y() + 2)));

    Walker walker;
    walker.vel = Vec2(1, 0);
    const Walker moved = step_walker(walker, 1.0, ThermalEnv(1, 1, 0), Eigen::Vector4d::Zero());
    const double err = std::max(std::abs(moved.vel.x() - std::exp(-1.0)), std::abs(moved.pos.x() - (1 - std::exp(-1.0))));
    add("noise-free Langevin step", err <= 1e-15, err);
    return checks;
}

int run(const RunConfig& config, const std::filesystem::path& out_dir, int lanes, std::ostream& log)
{
    if (config.subcommand == Subcommand::Selftest) {
        bool ok = true;
        for (const auto& c : selftest()) {
            log << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.detail << ")\n";
            ok = ok && c.passed;
        }
        return ok ? 0 : 1;
    }

    std::filesystem::create_directories(out_dir);
    switch (config.subcommand) {
    case Subcommand::Simulate:
    case Subcommand::Rates: {
        const auto result = compute_rates(config, lanes);
        if (config.subcommand == Subcommand::Simulate) {
            for (const auto& r : result.runs) {
                char name[32];
                std::snprintf(name, sizeof name, "trajectory_r%03u.csv", r.replica);
                write_file(out_dir / name, trajectory_csv(r));
            }
        }
        write_file(out_dir / "replicas.csv", replicas_csv(result.summary));
        write_file(out_dir / "summary.json", summary_json(config, result.summary));
        const auto& x = result.summary.x;
        log << "gamma_x msd=" << format_number(x.msd.gamma_rate) << " +- " << format_number(x.msd.standard_error)
            << " green_kubo=" << format_number(x.green_kubo.gamma_rate) << " +- "
            << format_number(x.green_kubo.standard_error) << " analytic=" << format_number(x.analytic.gamma_rate)
            << '\n';
        break;
    }
    case Subcommand::Fields:
        write_file(out_dir / "fields.csv", fields_csv(config));
        write_file(out_dir / "fields.json", fields_json(config));
        break;
    case Subcommand::Design: write_file(out_dir / "design.json", design_json(config)); break;
    case Subcommand::Selftest: break;
    }
    log << "wrote artifacts to " << out_dir.string() << '\n';
    return 0;
}

}  // namespace windrift
