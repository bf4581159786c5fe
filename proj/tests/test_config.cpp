#include "doctest.h"

#include "windrift/config.hpp"

#include <string>

using namespace windrift;

namespace {

const std::string kMinimal = R"(# fixed counts
mass = 1
eta = 2        # gamma = 2
temperature = 1
l_x = 10
l_y = 10
n_vortices = 4
n_antivortices = 4
dt = 0.1
total_time = 1000
)";

std::string error_key(const std::string& text, Subcommand sub = Subcommand::Rates)
{
    try {
        parse_config(text, sub);
    } catch (const ConfigError& e) {
        return e.key();
    }
    return "<none>";
}

}  // namespace

TEST_CASE("minimal document with defaults")
{
    const auto cfg = parse_config(kMinimal, Subcommand::Rates);
    CHECK(cfg.env.gamma() == doctest::Approx(2));
    CHECK(cfg.fit_window().t_min == doctest::Approx(5));
    CHECK(cfg.fit_window().t_max == doctest::Approx(50));
    CHECK(cfg.green_kubo_cutoff() == doctest::Approx(10));
    CHECK(cfg.replicas == 20);
    CHECK(cfg.sample_interval == doctest::Approx(0.1));
    CHECK(cfg.master_seed == 0);
    CHECK(*cfg.n_vortices == 4);
    const auto ens = cfg.ensemble();
    CHECK(ens.sample_stride == 1);
    CHECK(ens.total_steps() == 10000);
}

TEST_CASE("parsing is deterministic")
{
    const auto a = parse_config(kMinimal, Subcommand::Rates);
    const auto b = parse_config(kMinimal, Subcommand::Rates);
    CHECK(a.entries == b.entries);
}

TEST_CASE("errors name the offending key")
{
    std::string bad = kMinimal;
    bad.replace(bad.find("eta = 2"), 7, "eta = -1");
    CHECK(error_key(bad) == "eta");
    CHECK_THROWS_WITH(parse_config(bad, Subcommand::Rates), doctest::Contains("eta"));

    CHECK(error_key(kMinimal + "etaa = 1\n") == "etaa");
    CHECK(error_key(kMinimal + "dt = 0.2\n") == "dt");
    CHECK(error_key(kMinimal + "replicas = two\n") == "replicas");
    CHECK(error_key(kMinimal + "replicas = 2.5\n") == "replicas");
    CHECK(error_key(kMinimal + "replicas = 5\n") == "replicas");
    CHECK(error_key(kMinimal + "replicas = 1\n") == "total_time");
    CHECK(error_key(kMinimal + "master_seed = -3\n") == "master_seed");
    CHECK(error_key(kMinimal + "sample_interval = 0.15\n") == "sample_interval");
    CHECK(error_key(kMinimal + "fit_t_min = 1\n") == "fit_t_min");
    CHECK(error_key(kMinimal + "gk_cutoff = 2000\n") == "gk_cutoff");
    CHECK(error_key(kMinimal + "f0 =\n") == "f0");

    std::string unbalanced = kMinimal;
    unbalanced.replace(unbalanced.find("n_antivortices = 4"), 18, "n_antivortices = 5");
    CHECK(error_key(unbalanced) == "n_antivortices");

    std::string short_run = kMinimal;
    short_run.replace(short_run.find("total_time = 1000"), 17, "total_time = 20");
    CHECK(error_key(short_run) == "total_time");

    std::string no_pop = kMinimal;
    no_pop.replace(no_pop.find("n_vortices = 4\nn_antivortices = 4\n"), 34, "");
    CHECK(error_key(no_pop) == "f0");
    CHECK_NOTHROW(parse_config(no_pop + "f0 = 0.5\n", Subcommand::Simulate));

    CHECK_THROWS_AS(parse_config("just words\n", Subcommand::Rates), ConfigError);
}

TEST_CASE("fields and design documents")
{
    const std::string fields = "zeta = 1\na_coeff = 1\nb_coeff = 50\ng_coupling = 0.1\nsigma = 1\nd_thickness = 1\n";
    const auto f = parse_config(fields, Subcommand::Fields);
    REQUIRE(f.material.has_value());
    CHECK(f.material->b_coeff == 50);
    CHECK(error_key(fields, Subcommand::Design) == "r_eff");
    CHECK(error_key("zeta = 1\n", Subcommand::Fields) == "a_coeff");

    const std::string design = "r_eff = 0.02\nl_x = 3\nl_y = 1\ntemperature = 1\n";
    const auto d = parse_config(design, Subcommand::Design);
    CHECK(d.device.n1 == 0);
    CHECK(d.device.n2 == 1);
    CHECK_FALSE(d.material.has_value());
    CHECK(error_key(design + "n1 = 1\n", Subcommand::Design) == "n2");
    CHECK(error_key(design + "l_prime = 2\n", Subcommand::Design) == "rho_min");
}

TEST_CASE("subcommand names")
{
    for (auto s : {Subcommand::Simulate, Subcommand::Rates, Subcommand::Fields, Subcommand::Design,
                   Subcommand::Selftest})
        CHECK(parse_subcommand(to_string(s)) == s);
    CHECK_FALSE(parse_subcommand("run").has_value());
}
