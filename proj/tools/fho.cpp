#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fho/classical.hpp"
#include "fho/dynamics.hpp"
#include "fho/experiments.hpp"
#include "fho/io.hpp"
#include "fho/model.hpp"
#include "fho/validate.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitValidation = 3;

// Fully resolved run configuration. Resolution order (low to high):
// built-in defaults, preset, config file, command-line flags.
struct RunConfig {
    std::string preset;
    std::string scheme = "K";       // K | H
    std::string drive_case;         // resonant | nonresonant | "" (from omega)
    double mass = 1.6726219e-27;
    double omega0 = 2.0 * M_PI * 1e9;
    double omega = -1.0;            // <0: derived from drive_case
    double alpha = 1e-13;
    double phi = 0.0;
    double hbar = 1.054571817e-34;
    int n_states = 12;
    double dt = 0.0;                // <=0: w0 dt = 1e-3
    double t_end = 0.0;             // <=0: 50 natural periods
    int stride = 10;
    std::string out = ".";
    int jobs = 1;
    std::uint64_t seed = 12345;
    double x0 = 0.0, v0 = 0.0;      // classical subcommand initial condition
    std::vector<double> alphas;     // explicit sweep grid
    double alpha_min = 1e-15;
    double alpha_max = 1e-12;
    int alpha_points = 20;
};

// Optional values captured from the command line; only set flags override.
struct FlagValues {
    std::optional<std::string> config_path, preset, scheme, drive_case, out;
    std::optional<double> mass, omega0, omega, alpha, phi, hbar, dt, t_end;
    std::optional<double> x0, v0, alpha_min, alpha_max;
    std::optional<int> n_states, stride, jobs, alpha_points;
    std::optional<std::uint64_t> seed;
    std::vector<double> alphas;
};

void apply_preset(RunConfig& cfg, const std::string& name) {
    const auto sc = fho::preset_scenario(name);
    if (!sc) throw std::invalid_argument("unknown preset '" + name + "'");
    cfg.preset = name;
    cfg.mass = sc->params.mass;
    cfg.omega0 = sc->params.omega0;
    cfg.omega = sc->params.omega;
    cfg.alpha = sc->params.alpha;
    cfg.phi = sc->params.phi;
    cfg.n_states = sc->n_states;
    cfg.drive_case = sc->params.is_resonant() ? "resonant" : "nonresonant";
}

void apply_json(RunConfig& cfg, const json& j) {
    if (j.contains("preset")) {
        const std::string name = j.at("preset").get<std::string>();
        if (!name.empty()) apply_preset(cfg, name);
    }
    auto get = [&](const char* key, auto& field) {
        if (j.contains(key)) field = j.at(key).get<std::decay_t<decltype(field)>>();
    };
    get("scheme", cfg.scheme);
    get("case", cfg.drive_case);
    get("mass", cfg.mass);
    get("omega0", cfg.omega0);
    get("omega", cfg.omega);
    get("alpha", cfg.alpha);
    get("phi", cfg.phi);
    get("hbar", cfg.hbar);
    get("n_states", cfg.n_states);
    get("dt", cfg.dt);
    get("t_end", cfg.t_end);
    get("stride", cfg.stride);
    get("out", cfg.out);
    get("jobs", cfg.jobs);
    get("seed", cfg.seed);
    get("x0", cfg.x0);
    get("v0", cfg.v0);
    get("alphas", cfg.alphas);
    get("alpha_min", cfg.alpha_min);
    get("alpha_max", cfg.alpha_max);
    get("alpha_points", cfg.alpha_points);
}

RunConfig resolve_config(const FlagValues& f) {
    RunConfig cfg;
    if (f.preset) apply_preset(cfg, *f.preset);
    if (f.config_path) {
        std::ifstream in(*f.config_path);
        if (!in) throw std::invalid_argument("cannot read config file " + *f.config_path);
        json j = json::parse(in);
        if (j.contains("config")) j = j.at("config");  // accept a run manifest
        apply_json(cfg, j);
    }
    if (f.preset) cfg.preset = *f.preset;  // flags override the file's preset
    if (f.preset && f.config_path) apply_preset(cfg, *f.preset);

    auto set = [](auto& field, const auto& opt) { if (opt) field = *opt; };
    set(cfg.scheme, f.scheme);
    set(cfg.drive_case, f.drive_case);
    set(cfg.mass, f.mass);
    set(cfg.omega0, f.omega0);
    set(cfg.omega, f.omega);
    set(cfg.alpha, f.alpha);
    set(cfg.phi, f.phi);
    set(cfg.hbar, f.hbar);
    set(cfg.n_states, f.n_states);
    set(cfg.dt, f.dt);
    set(cfg.t_end, f.t_end);
    set(cfg.stride, f.stride);
    set(cfg.out, f.out);
    set(cfg.jobs, f.jobs);
    set(cfg.seed, f.seed);
    set(cfg.x0, f.x0);
    set(cfg.v0, f.v0);
    set(cfg.alpha_min, f.alpha_min);
    set(cfg.alpha_max, f.alpha_max);
    set(cfg.alpha_points, f.alpha_points);
    if (!f.alphas.empty()) cfg.alphas = f.alphas;

    // Derive omega from the case, or the case from omega.
    if (cfg.omega < 0.0) {
        if (cfg.drive_case == "resonant") cfg.omega = cfg.omega0;
        else cfg.omega = 0.5 * cfg.omega0;  // nonresonant default drive
    }
    const bool resonant = (cfg.omega == cfg.omega0);
    if (cfg.drive_case.empty()) cfg.drive_case = resonant ? "resonant" : "nonresonant";
    if (cfg.drive_case == "resonant" && !resonant)
        throw std::invalid_argument("case=resonant requires omega == omega0");
    if (cfg.drive_case == "nonresonant" && resonant)
        throw std::invalid_argument("case=nonresonant requires omega != omega0");
    if (cfg.drive_case != "resonant" && cfg.drive_case != "nonresonant")
        throw std::invalid_argument("case must be 'resonant' or 'nonresonant'");
    if (cfg.scheme != "K" && cfg.scheme != "H")
        throw std::invalid_argument("scheme must be 'K' or 'H'");
    return cfg;
}

fho::OscillatorParams params_of(const RunConfig& cfg) {
    fho::OscillatorParams p;
    p.mass = cfg.mass;
    p.omega0 = cfg.omega0;
    p.omega = cfg.omega;
    p.alpha = cfg.alpha;
    p.phi = cfg.phi;
    p.hbar = cfg.hbar;
    p.validate();
    return p;
}

fho::SchemeKind scheme_of(const RunConfig& cfg) {
    if (cfg.scheme == "H") return fho::SchemeKind::Hamiltonian;
    return cfg.drive_case == "resonant" ? fho::SchemeKind::KResonant
                                        : fho::SchemeKind::KNonResonant;
}

fho::Scenario scenario_of(const RunConfig& cfg) {
    fho::Scenario sc;
    sc.params = params_of(cfg);
    sc.scheme = scheme_of(cfg);
    sc.n_states = cfg.n_states;
    sc.t_end = cfg.t_end;
    sc.dt = cfg.dt;
    sc.stride = cfg.stride;
    sc.resolve_defaults();
    sc.validate();
    return sc;
}

json config_json(const RunConfig& cfg) {
    return json{{"preset", cfg.preset},
                {"scheme", cfg.scheme},
                {"case", cfg.drive_case},
                {"mass", cfg.mass},
                {"omega0", cfg.omega0},
                {"omega", cfg.omega},
                {"alpha", cfg.alpha},
                {"phi", cfg.phi},
                {"hbar", cfg.hbar},
                {"n_states", cfg.n_states},
                {"dt", cfg.dt},
                {"t_end", cfg.t_end},
                {"stride", cfg.stride},
                {"out", cfg.out},
                {"jobs", cfg.jobs},
                {"seed", cfg.seed},
                {"x0", cfg.x0},
                {"v0", cfg.v0},
                {"alphas", cfg.alphas},
                {"alpha_min", cfg.alpha_min},
                {"alpha_max", cfg.alpha_max},
                {"alpha_points", cfg.alpha_points}};
}

void write_manifest(const fs::path& path, const json& manifest) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << manifest.dump(2) << '\n';
}

json base_manifest(const std::string& command, const RunConfig& cfg) {
    const fho::ScaledParams sp = fho::scale_to_dimensionless(params_of(cfg));
    return json{{"command", command},
                {"config", config_json(cfg)},
                {"derived",
                 {{"epsilon", sp.epsilon},
                  {"omega_ratio", sp.omega_ratio},
                  {"lambda_joule", fho::lambda_coupling(params_of(cfg))},
                  {"scheme_kind", fho::scheme_name(scheme_of(cfg))}}}};
}

int cmd_simulate(const RunConfig& cfg) {
    fho::Scenario sc = scenario_of(cfg);
    const fs::path dir(cfg.out);
    json manifest = base_manifest("simulate", cfg);
    manifest["derived"]["steps"] = sc.total_steps();
    manifest["derived"]["dt_effective"] = sc.dt;
    manifest["derived"]["t_end_effective"] = double(sc.total_steps()) * sc.dt;

    try {
        const fho::ObservableSeries series = fho::run_scenario(sc);
        fho::write_series_csv(dir / "series.csv", series);
        manifest["diagnostics"] = {{"max_norm_error", series.max_norm_error},
                                   {"samples", series.t.size()},
                                   {"aborted", false}};
        manifest["outputs"] = {{"series_csv", "series.csv"}};
        write_manifest(dir / "manifest.json", manifest);
        std::cout << "wrote " << (dir / "series.csv").string() << " (" << series.t.size()
                  << " samples, max norm error " << series.max_norm_error << ")\n";
        return kExitOk;
    } catch (const fho::NumericalAbort& e) {
        manifest["diagnostics"] = {{"aborted", true},
                                   {"error", e.what()},
                                   {"norm_error", e.norm_error()},
                                   {"suggested_dt", e.suggested_dtau() / cfg.omega0}};
        write_manifest(dir / "manifest.json", manifest);
        std::cerr << "numerical abort: " << e.what() << "\n";
        return kExitNumerical;
    }
}

int cmd_sweep(const RunConfig& cfg_in) {
    RunConfig cfg = cfg_in;
    // Sweep rows clamp the step to the stable size for their drive strength;
    // a short default horizon keeps the strong rows tractable.
    if (cfg.t_end <= 0.0) cfg.t_end = 2.0 * M_PI / cfg.omega0;
    std::vector<double> alphas = cfg.alphas;
    if (alphas.empty()) {
        if (!(cfg.alpha_min > 0.0) || !(cfg.alpha_max >= cfg.alpha_min) || cfg.alpha_points < 1)
            throw std::invalid_argument("invalid sweep grid (alpha_min/alpha_max/alpha_points)");
        const double lmin = std::log(cfg.alpha_min);
        const double lmax = std::log(cfg.alpha_max);
        for (int i = 0; i < cfg.alpha_points; ++i) {
            const double f = cfg.alpha_points == 1 ? 0.0 : double(i) / (cfg.alpha_points - 1);
            alphas.push_back(std::exp(lmin + f * (lmax - lmin)));
        }
    }
    for (double a : alphas)
        if (!(a >= 0.0)) throw std::invalid_argument("sweep alphas must be non-negative");

    fho::Scenario base = scenario_of(cfg);
    const fho::SweepResult sweep = fho::sweep_alpha(base, alphas, cfg.jobs);

    const fs::path dir(cfg.out);
    fho::write_sweep_csv(dir / "sweep.csv", sweep);

    json manifest = base_manifest("sweep", cfg);
    json rows = json::array();
    for (const fho::SweepRow& row : sweep.rows) {
        json r{{"alpha", row.alpha}, {"dt", row.dt}};
        if (!row.error.empty()) r["error"] = row.error;
        rows.push_back(r);
    }
    manifest["diagnostics"] = {{"rows", rows}, {"any_failed", sweep.any_failed()}};
    manifest["outputs"] = {{"sweep_csv", "sweep.csv"}};
    write_manifest(dir / "manifest.json", manifest);

    if (sweep.any_failed()) {
        std::cerr << "sweep finished with failed rows; see manifest.json\n";
        return kExitNumerical;
    }
    std::cout << "wrote " << (dir / "sweep.csv").string() << " (" << sweep.rows.size()
              << " rows)\n";
    return kExitOk;
}

int cmd_classical(const RunConfig& cfg) {
    const fho::OscillatorParams p = params_of(cfg);
    const fho::DriveCase dc = cfg.drive_case == "resonant" ? fho::DriveCase::Resonant
                                                           : fho::DriveCase::NonResonant;
    const double t_end = cfg.t_end > 0.0 ? cfg.t_end : 50.0 * 2.0 * M_PI / p.omega0;
    const double dt = cfg.dt > 0.0 ? cfg.dt : 1e-3 / p.omega0;
    const long long steps = std::max<long long>(1, std::llround(t_end / dt));

    const fho::IntegrationConstants ic =
        fho::integration_constants(p, fho::ClassicalState{cfg.x0, cfg.v0, 0.0}, dc);

    std::vector<fho::ClassicalSample> samples;
    samples.reserve(static_cast<size_t>(steps / cfg.stride) + 2);
    for (long long i = 0; i <= steps; i += cfg.stride) {
        const double t = double(i) * dt;
        const fho::ClassicalState s = fho::trajectory(p, ic, t, dc);
        fho::ClassicalSample row;
        row.t = t;
        row.x = s.x;
        row.v = s.v;
        row.k = fho::constant_of_motion(p, s, dc);
        row.w = fho::perturbation_w(p, s, dc);
        samples.push_back(row);
    }

    const fs::path dir(cfg.out);
    fho::write_classical_csv(dir / "classical.csv", samples);
    json manifest = base_manifest("classical", cfg);
    manifest["diagnostics"] = {{"samples", samples.size()},
                               {"c1", ic.c1},
                               {"c2", ic.c2}};
    manifest["outputs"] = {{"classical_csv", "classical.csv"}};
    write_manifest(dir / "manifest.json", manifest);
    std::cout << "wrote " << (dir / "classical.csv").string() << " (" << samples.size()
              << " samples)\n";
    return kExitOk;
}

int cmd_validate(const RunConfig& cfg) {
    fho::ValidationConfig vc;
    vc.params = params_of(cfg);
    vc.n_states = cfg.n_states;
    vc.seed = cfg.seed;
    const std::vector<fho::CheckResult> checks = fho::run_validation(vc);

    json report = base_manifest("validate", cfg);
    json items = json::array();
    bool ok = true;
    for (const fho::CheckResult& c : checks) {
        std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << "  residual " << c.residual
                  << " (threshold " << c.threshold << ")";
        if (!c.details.empty()) std::cout << "  " << c.details;
        std::cout << '\n';
        items.push_back({{"name", c.name},
                         {"residual", c.residual},
                         {"threshold", c.threshold},
                         {"pass", c.pass},
                         {"details", c.details}});
        ok = ok && c.pass;
    }
    report["checks"] = items;
    report["all_passed"] = ok;
    write_manifest(fs::path(cfg.out) / "validate.json", report);
    if (!ok) {
        std::cerr << "validation failed\n";
        return kExitValidation;
    }
    std::cout << "all validation suites passed\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Forced harmonic oscillator: constant-of-motion (x,v) quantization "
                 "versus canonical (x,p) quantization"};
    app.require_subcommand(1);

    FlagValues f;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", f.config_path, "JSON config file (or a run manifest)");
        cmd->add_option("--preset", f.preset, "parameter preset: paper-resonant, paper-nonresonant");
        cmd->add_option("--scheme", f.scheme, "quantization scheme: K or H");
        cmd->add_option("--case", f.drive_case, "drive case: resonant or nonresonant");
        cmd->add_option("--mass", f.mass, "particle mass [kg]");
        cmd->add_option("--omega0", f.omega0, "natural frequency [rad/s]");
        cmd->add_option("--omega", f.omega, "drive frequency [rad/s]");
        cmd->add_option("--alpha", f.alpha, "drive amplitude [N]");
        cmd->add_option("--phi", f.phi, "drive phase [rad]");
        cmd->add_option("--hbar", f.hbar, "Planck constant [J s]");
        cmd->add_option("--n-states", f.n_states, "number of retained basis states");
        cmd->add_option("--dt", f.dt, "integration step [s]");
        cmd->add_option("--t-end", f.t_end, "integration horizon [s]");
        cmd->add_option("--stride", f.stride, "record every stride-th step");
        cmd->add_option("--out", f.out, "output directory");
        cmd->add_option("--jobs", f.jobs, "sweep worker threads");
        cmd->add_option("--seed", f.seed, "random seed for validation suites");
        return cmd;
    };

    CLI::App* simulate = add_common(app.add_subcommand(
        "simulate", "integrate one scheme and emit series.csv"));
    CLI::App* sweep = add_common(app.add_subcommand(
        "sweep", "average entropy/energy for both schemes over a drive-amplitude grid"));
    sweep->add_option("--alphas", f.alphas, "explicit drive amplitudes [N]");
    sweep->add_option("--alpha-min", f.alpha_min, "sweep grid lower bound [N]");
    sweep->add_option("--alpha-max", f.alpha_max, "sweep grid upper bound [N]");
    sweep->add_option("--alpha-points", f.alpha_points, "sweep grid size");
    CLI::App* classical = add_common(app.add_subcommand(
        "classical", "emit the classical trajectory and constant of motion"));
    classical->add_option("--x0", f.x0, "initial position [m]");
    classical->add_option("--v0", f.v0, "initial velocity [m/s]");
    CLI::App* validate = add_common(app.add_subcommand(
        "validate", "run the oracle and integrator verification suites"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitConfig;
    }

    try {
        const RunConfig cfg = resolve_config(f);
        if (simulate->parsed()) return cmd_simulate(cfg);
        if (sweep->parsed()) return cmd_sweep(cfg);
        if (classical->parsed()) return cmd_classical(cfg);
        if (validate->parsed()) return cmd_validate(cfg);
        return kExitConfig;
    } catch (const fho::NumericalAbort& e) {
        std::cerr << "numerical abort: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    }
}
