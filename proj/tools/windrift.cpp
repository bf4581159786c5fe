#include "windrift/runner.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string read_text(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read config file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Vortex Langevin diffusion on a torus and thermal degradation rates"};
    app.set_version_flag("--version", "windrift 1.0.0");

    std::string command;
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out_dir;
    int lanes = 1;

    app.add_option("subcommand", command, "simulate | rates | fields | design | selftest")
        ->required()
        ->check(CLI::IsMember({"simulate", "rates", "fields", "design", "selftest"}));
    app.add_option("--config", config_path, "key = value configuration file")->check(CLI::ExistingFile);
    app.add_option("--seed", seed, "master seed, overrides master_seed in the config");
    app.add_option("--out", out_dir, "output directory, overrides output_dir in the config");
    app.add_option("--lanes", lanes, "worker threads; results do not depend on it")->check(CLI::Range(1, 256));

    CLI11_PARSE(app, argc, argv);

    try {
        const auto sub = *windrift::parse_subcommand(command);
        windrift::RunConfig config;
        if (sub == windrift::Subcommand::Selftest && config_path.empty()) {
            config.subcommand = sub;
        } else {
            if (config_path.empty()) throw std::runtime_error("--config is required for " + command);
            config = windrift::parse_config(read_text(config_path), sub);
        }
        if (seed) config.master_seed = *seed;
        const std::string dir = out_dir.value_or(config.output_dir);
        return windrift::run(config, dir, lanes, std::cout);
    } catch (const std::exception& e) {
        std::cerr << "windrift: " << e.what() << '\n';
        return 2;
    }
}
