#pragma once

// Orchestration of the CLI subcommands and the bit-stable artifact formats.
//
// Artifacts written to the output directory:
//   simulate: trajectory_rNNN.csv (t,alpha_x,alpha_y), replicas.csv, summary.json
//   rates:    replicas.csv, summary.json
//   fields:   fields.csv (r,B,Ex,Ey,E2), fields.json
//   design:   design.json
// Numbers in CSV files carry 17 significant digits; JSON numbers use the
// shortest representation that round-trips. No timestamps are written, so a
// fixed (config, seed) reproduces every file byte for byte.

#include "windrift/config.hpp"
#include "windrift/rates.hpp"
#include "windrift/torus.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace windrift {

/// 17 significant digits, shortest of fixed/scientific.
std::string format_number(double value);

struct AxisRates {
    RateEstimate msd;
    RateEstimate green_kubo;
    RateEstimate analytic;  ///< replica mean over realized populations
    std::optional<PredictedRate> predicted;
};

struct ReplicaRecord {
    std::uint32_t replica = 0;
    int n_vortices = 0;
    int n_antivortices = 0;
    double msd_x = 0, green_kubo_x = 0, analytic_x = 0;
    double msd_y = 0, green_kubo_y = 0, analytic_y = 0;
};

struct RateSummary {
    FitWindow window;
    double green_kubo_cutoff = 0;
    double mean_population = 0;       ///< Boltzmann mean (0 without f0)
    double mean_realized_total = 0;   ///< average n_v + n_a over replicas
    AxisRates x;
    AxisRates y;
    std::vector<ReplicaRecord> replicas;
};

struct RatesResult {
    RateSummary summary;
    std::vector<ReplicaRun> runs;
};

/// Runs the ensemble and every estimator; no I/O.
RatesResult compute_rates(const RunConfig& config, int lanes = 1);

std::string summary_json(const RunConfig& config, const RateSummary& summary);
std::string replicas_csv(const RateSummary& summary);
std::string trajectory_csv(const ReplicaRun& run);
std::string fields_csv(const RunConfig& config);
std::string fields_json(const RunConfig& config);
std::string design_json(const RunConfig& config);

struct SelfCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

std::vector<SelfCheck> selftest();

/// Executes `config.subcommand`, writing artifacts under `out_dir` and a
/// short log to `log`. Returns the process exit status.
int run(const RunConfig& config, const std::filesystem::path& out_dir, int lanes, std::ostream& log);

}  // namespace windrift
