#include "windrift/config.hpp"

#include <charconv>
#include <cmath>
#include <limits>

namespace windrift {

namespace {

enum class Kind { Real, Integer, Seed, Text };

struct KeySpec {
    const char* name;
    Kind kind;
};

// Every accepted key.
constexpr KeySpec kKeys[] = {
    {"mass", Kind::Real},          {"eta", Kind::Real},           {"temperature", Kind::Real},
    {"l_x", Kind::Real},           {"l_y", Kind::Real},           {"d_thickness", Kind::Real},
    {"f0", Kind::Real},            {"n_vortices", Kind::Integer}, {"n_antivortices", Kind::Integer},
    {"dt", Kind::Real},            {"total_time", Kind::Real},    {"sample_interval", Kind::Real},
    {"replicas", Kind::Integer},   {"master_seed", Kind::Seed},   {"output_dir", Kind::Text},
    {"fit_t_min", Kind::Real},     {"fit_t_max", Kind::Real},     {"gk_cutoff", Kind::Real},
    {"zeta", Kind::Real},          {"a_coeff", Kind::Real},       {"b_coeff", Kind::Real},
    {"g_coupling", Kind::Real},    {"sigma", Kind::Real},         {"l_tr", Kind::Real},
    {"c_light", Kind::Real},       {"speed", Kind::Real},         {"r_min", Kind::Real},
    {"r_max", Kind::Real},         {"n_points", Kind::Integer},   {"r_eff", Kind::Real},
    {"n1", Kind::Integer},         {"n2", Kind::Integer},         {"epsilon_line", Kind::Real},
    {"length_unit_m", Kind::Real}, {"l_prime", Kind::Real},       {"rho_min", Kind::Real},
};

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

template <typename T>
std::optional<T> parse_number(std::string_view text)
{
    T value{};
    const auto* begin = text.data();
    const auto* end = text.data() + text.size();
    if (!text.empty() && text.front() == '+') ++begin;
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) return std::nullopt;
    return value;
}

ConfigValue parse_value(const KeySpec& spec, std::string_view raw)
{
    const std::string key = spec.name;
    switch (spec.kind) {
    case Kind::Real: {
        const auto v = parse_number<double>(raw);
        if (!v || !std::isfinite(*v)) throw ConfigError(key, "expected a finite number, got '" + std::string(raw) + "'");
        return *v;
    }
    case Kind::Integer: {
        const auto v = parse_number<std::int64_t>(raw);
        if (!v) throw ConfigError(key, "expected an integer, got '" + std::string(raw) + "'");
        return *v;
    }
    case Kind::Seed: {
        const auto v = parse_number<std::uint64_t>(raw);
        if (!v) throw ConfigError(key, "expected an unsigned 64-bit integer, got '" + std::string(raw) + "'");
        return *v;
    }
    case Kind::Text: {
        std::string_view s = raw;
        if (s.size() >= 2 && s.front() == '"' && s.back() == '"') s = s.substr(1, s.size() - 2);
        if (s.empty()) throw ConfigError(key, "expected a non-empty string");
        return std::string(s);
    }
    }
    throw ConfigError(key, "unsupported value kind");
}

class Reader {
public:
    explicit Reader(const std::map<std::string, ConfigValue>& entries) : entries_(entries) {}

    std::optional<double> real(const std::string& key) const
    {
        const auto it = entries_.find(key);
        if (it == entries_.end()) return std::nullopt;
        return std::get<double>(it->second);
    }
    std::optional<std::int64_t> integer(const std::string& key) const
    {
        const auto it = entries_.find(key);
        if (it == entries_.end()) return std::nullopt;
        return std::get<std::int64_t>(it->second);
    }
    double required_real(const std::string& key) const
    {
        const auto v = real(key);
        if (!v) throw ConfigError(key, "required key is missing");
        return *v;
    }

private:
    const std::map<std::string, ConfigValue>& entries_;
};

void check(bool ok, const std::string& key, const std::string& message)
{
    if (!ok) throw ConfigError(key, message);
}

double positive(const Reader& in, const std::string& key)
{
    const double v = in.required_real(key);
    check(v > 0, key, "must be positive");
    return v;
}

std::optional<double> optional_positive(const Reader& in, const std::string& key)
{
    const auto v = in.real(key);
    if (v) check(*v > 0, key, "must be positive");
    return v;
}

int to_int(std::int64_t v, const std::string& key)
{
    check(v >= std::numeric_limits<int>::min() && v <= std::numeric_limits<int>::max(), key, "out of range");
    return static_cast<int>(v);
}

void read_material(RunConfig& cfg, const Reader& in)
{
    MaterialParams p;
    p.zeta = positive(in, "zeta");
    p.a_coeff = positive(in, "a_coeff");
    p.b_coeff = positive(in, "b_coeff");
    p.g_coupling = positive(in, "g_coupling");
    p.sigma = positive(in, "sigma");
    p.d_thickness = positive(in, "d_thickness");
    p.l_tr = optional_positive(in, "l_tr");
    if (const auto c = optional_positive(in, "c_light")) p.c_light = *c;
    cfg.material = p;
}

void read_simulation(RunConfig& cfg, const Reader& in)
{
    const double mass = positive(in, "mass");
    const double eta = positive(in, "eta");
    const double temperature = in.required_real("temperature");
    check(temperature >= 0, "temperature", "must be non-negative");
    cfg.env = ThermalEnv(mass, eta, temperature);

    const double l_x = positive(in, "l_x");
    const double l_y = positive(in, "l_y");
    check(l_x >= l_y, "l_x", "must be at least l_y");
    cfg.geometry = TorusGeometry(l_x, l_y, optional_positive(in, "d_thickness").value_or(1.0));

    cfg.dt = positive(in, "dt");
    cfg.total_time = positive(in, "total_time");
    check(cfg.total_time >= cfg.dt, "total_time", "must be at least dt");
    cfg.sample_interval = optional_positive(in, "sample_interval").value_or(cfg.dt);
    const double stride = cfg.sample_interval / cfg.dt;
    check(std::abs(stride - std::round(stride)) < 1e-9 * stride && stride >= 1 - 1e-9, "sample_interval",
          "must be a positive integer multiple of dt");

    if (const auto r = in.integer("replicas")) {
        // Replica scatter needs 20 samples; a single run is split into 20 blocks instead.
        check(*r == 1 || *r >= 20, "replicas", "must be 1 or at least 20");
        cfg.replicas = to_int(*r, "replicas");
    }

    const auto nv = in.integer("n_vortices");
    const auto na = in.integer("n_antivortices");
    if (nv || na) {
        check(nv.has_value(), "n_vortices", "required when n_antivortices is given");
        check(na.has_value(), "n_antivortices", "required when n_vortices is given");
        check(*nv >= 0, "n_vortices", "must be non-negative");
        check(*na >= 0, "n_antivortices", "must be non-negative");
        check(*nv == *na, "n_antivortices", "must equal n_vortices (zero net vorticity)");
        cfg.n_vortices = to_int(*nv, "n_vortices");
        cfg.n_antivortices = to_int(*na, "n_antivortices");
    }
    if (const auto f0 = in.real("f0")) {
        check(*f0 >= 0, "f0", "must be non-negative");
        cfg.f0 = *f0;
        cfg.has_f0 = true;
    }
    check(cfg.n_vortices.has_value() || cfg.has_f0, "f0", "required unless n_vortices/n_antivortices are given");
    if (!cfg.n_vortices) check(temperature > 0, "temperature", "must be positive to sample a population");

    cfg.fit_t_min = optional_positive(in, "fit_t_min");
    cfg.fit_t_max = optional_positive(in, "fit_t_max");
    cfg.gk_cutoff = optional_positive(in, "gk_cutoff");
    const double relax = 1 / cfg.env.gamma();
    check(cfg.total_time >= 100 * relax * (1 - 1e-12), "total_time", "must be at least 100/gamma");
    const auto window = cfg.fit_window();
    check(window.t_min >= 10 * relax * (1 - 1e-12), "fit_t_min", "must be at least 10/gamma (diffusive regime)");
    check(cfg.green_kubo_cutoff() >= 10 * relax * (1 - 1e-12), "gk_cutoff", "must be at least 10/gamma");
    check(window.t_max > window.t_min, "fit_t_max", "must exceed fit_t_min");
    check(window.t_max < cfg.total_time, "fit_t_max", "must be shorter than total_time");
    check(cfg.green_kubo_cutoff() < cfg.total_time, "gk_cutoff", "must be shorter than total_time");
    if (cfg.replicas == 1)
        check(cfg.total_time >= 20 * (window.t_max + 2 * cfg.sample_interval), "total_time",
              "a single replica must span 20 blocks longer than fit_t_max");
}

void read_fields(RunConfig& cfg, const Reader& in)
{
    read_material(cfg, in);
    if (const auto v = optional_positive(in, "speed")) cfg.speed = *v;
    cfg.r_min = optional_positive(in, "r_min");
    cfg.r_max = optional_positive(in, "r_max");
    if (cfg.r_min && cfg.r_max) check(*cfg.r_max > *cfg.r_min, "r_max", "must exceed r_min");
    if (const auto n = in.integer("n_points")) {
        check(*n >= 2, "n_points", "must be at least 2");
        cfg.n_points = to_int(*n, "n_points");
    }
}

void read_design(RunConfig& cfg, const Reader& in)
{
    DeviceSpec& d = cfg.device;
    d.r_eff = positive(in, "r_eff");
    const auto n1 = in.integer("n1").value_or(0);
    const auto n2 = in.integer("n2").value_or(1);
    check(n1 >= 0, "n1", "must be non-negative");
    check(n2 > n1, "n2", "must exceed n1 (levels must differ)");
    d.n1 = to_int(n1, "n1");
    d.n2 = to_int(n2, "n2");
    d.l_x = positive(in, "l_x");
    d.l_y = positive(in, "l_y");
    check(d.l_x >= d.l_y, "l_x", "must be at least l_y");
    d.epsilon_line = in.real("epsilon_line").value_or(0.0);
    check(d.epsilon_line >= 0, "epsilon_line", "must be non-negative");
    d.temperature = positive(in, "temperature");
    if (const auto u = optional_positive(in, "length_unit_m")) d.length_unit_m = *u;
    cfg.l_prime = optional_positive(in, "l_prime");
    cfg.rho_min = optional_positive(in, "rho_min");
    check(cfg.l_prime.has_value() == cfg.rho_min.has_value(), cfg.l_prime ? "rho_min" : "l_prime",
          "l_prime and rho_min must be given together");
    if (cfg.l_prime) check(*cfg.l_prime > *cfg.rho_min, "l_prime", "must exceed rho_min");
    if (in.real("zeta")) read_material(cfg, in);
}

}  // namespace

std::string to_string(Subcommand s)
{
    switch (s) {
    case Subcommand::Simulate: return "simulate";
    case Subcommand::Rates: return "rates";
    case Subcommand::Fields: return "fields";
    case Subcommand::Design: return "design";
    case Subcommand::Selftest: return "selftest";
    }
    return "unknown";
}

std::optional<Subcommand> parse_subcommand(std::string_view name)
{
    for (auto s : {Subcommand::Simulate, Subcommand::Rates, Subcommand::Fields, Subcommand::Design,
                   Subcommand::Selftest})
        if (to_string(s) == name) return s;
    return std::nullopt;
}

FitWindow RunConfig::fit_window() const
{
    const FitWindow defaults = default_fit_window(env, total_time);
    return {fit_t_min.value_or(defaults.t_min), fit_t_max.value_or(defaults.t_max)};
}

double RunConfig::green_kubo_cutoff() const
{
    return gk_cutoff.value_or(default_green_kubo_cutoff(env));
}

EnsembleConfig RunConfig::ensemble() const
{
    EnsembleConfig e;
    e.env = env;
    e.geometry = geometry;
    e.n_vortices = n_vortices;
    e.n_antivortices = n_antivortices;
    e.f0 = f0;
    e.dt = dt;
    e.total_time = total_time;
    e.sample_stride = static_cast<std::uint64_t>(std::llround(sample_interval / dt));
    e.master_seed = master_seed;
    e.replicas = replicas;
    return e;
}

RunConfig parse_config(std::string_view text, Subcommand subcommand)
{
    RunConfig cfg;
    cfg.subcommand = subcommand;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("", "line " + std::to_string(line_no) + ": expected 'key = value'");
        const std::string key(trim(line.substr(0, eq)));
        const std::string_view raw = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError("", "line " + std::to_string(line_no) + ": missing key");

        const KeySpec* spec = nullptr;
        for (const auto& k : kKeys)
            if (key == k.name) spec = &k;
        if (!spec) throw ConfigError(key, "unknown key");
        if (cfg.entries.count(key)) throw ConfigError(key, "duplicate key");
        if (raw.empty()) throw ConfigError(key, "missing value");
        cfg.entries.emplace(key, parse_value(*spec, raw));
    }

    const Reader in(cfg.entries);
    if (const auto it = cfg.entries.find("master_seed"); it != cfg.entries.end())
        cfg.master_seed = std::get<std::uint64_t>(it->second);
    if (const auto it = cfg.entries.find("output_dir"); it != cfg.entries.end())
        cfg.output_dir = std::get<std::string>(it->second);

    switch (subcommand) {
    case Subcommand::Simulate:
    case Subcommand::Rates: read_simulation(cfg, in); break;
    case Subcommand::Fields: read_fields(cfg, in); break;
    case Subcommand::Design: read_design(cfg, in); break;
    case Subcommand::Selftest: break;
    }
    return cfg;
}

}  // namespace windrift
