#pragma once

// Run configuration: a flat `key = value` document, one entry per line,
// `#` starts a comment. Unknown keys, duplicates and malformed values are
// errors that name the key.

#include "windrift/langevin.hpp"
#include "windrift/material.hpp"
#include "windrift/memory_design.hpp"
#include "windrift/rates.hpp"
#include "windrift/torus.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace windrift {

enum class Subcommand { Simulate, Rates, Fields, Design, Selftest };

std::string to_string(Subcommand s);
std::optional<Subcommand> parse_subcommand(std::string_view name);

class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& key, const std::string& message)
        : std::runtime_error(key.empty() ? message : key + ": " + message), key_(key)
    {
    }
    const std::string& key() const { return key_; }

private:
    std::string key_;
};

using ConfigValue = std::variant<double, std::int64_t, std::uint64_t, std::string>;

struct RunConfig {
    Subcommand subcommand = Subcommand::Selftest;
    /// Every key present in the document with its typed value, sorted by key.
    std::map<std::string, ConfigValue> entries;

    // Simulation blocks (simulate, rates).
    ThermalEnv env;
    TorusGeometry geometry;
    double f0 = 0;
    bool has_f0 = false;
    std::optional<int> n_vortices;
    std::optional<int> n_antivortices;
    double dt = 0;
    double total_time = 0;
    double sample_interval = 0;  ///< defaults to dt
    int replicas = 20;
    std::uint64_t master_seed = 0;
    std::string output_dir = "out";
    std::optional<double> fit_t_min;
    std::optional<double> fit_t_max;
    std::optional<double> gk_cutoff;

    // Material (fields; optional for design).
    std::optional<MaterialParams> material;
    double speed = 1;
    std::optional<double> r_min;
    std::optional<double> r_max;
    int n_points = 200;

    // Design.
    DeviceSpec device;
    std::optional<double> l_prime;
    std::optional<double> rho_min;

    /// Fit window with defaults t_min = 10/gamma, t_max = min(total/2, 10 t_min).
    FitWindow fit_window() const;
    /// Green-Kubo cutoff, default 20/gamma.
    double green_kubo_cutoff() const;
    EnsembleConfig ensemble() const;

    bool has(const std::string& key) const { return entries.count(key) > 0; }
};

/// Parses and validates `text` for `subcommand`.
RunConfig parse_config(std::string_view text, Subcommand subcommand);

}  // namespace windrift
