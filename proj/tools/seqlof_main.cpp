// Command-line front end: Monte Carlo experiments, design comparisons, and
// a stdin-driven sequential monitor. Every file-writing subcommand emits a
// CSV plus a run manifest beside it, and a fixed seed makes reruns
// byte-identical.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "seqlof/design_analysis.hpp"
#include "seqlof/errors.hpp"
#include "seqlof/mc.hpp"
#include "seqlof/regression.hpp"
#include "seqlof/report.hpp"
#include "seqlof/sequential_test.hpp"

namespace {

using namespace seqlof;

NoiseLaw parse_noise(const std::string& name) {
    if (name == "gaussian") {
        return NoiseLaw::gaussian;
    }
    if (name == "uniform") {
        return NoiseLaw::uniform;
    }
    throw ConfigError("noise must be gaussian or uniform");
}

struct DesignOption {
    std::string spec = "uniform";

    // "uniform" | "split:Q@T0" | "cluster:Q@T0[:EPS]"
    std::optional<Design> resolve(int n) const {
        if (spec == "uniform" || spec.empty()) {
            return std::nullopt; // harness default
        }
        auto colon = spec.find(':');
        if (colon == std::string::npos) {
            throw ConfigError("bad design spec: " + spec);
        }
        std::string kind = spec.substr(0, colon);
        std::string rest = spec.substr(colon + 1);
        auto at = rest.find('@');
        if (at == std::string::npos) {
            throw ConfigError("design spec needs Q@T0: " + spec);
        }
        QDesignSpec qspec;
        qspec.q = std::stod(rest.substr(0, at));
        std::string tail = rest.substr(at + 1);
        double epsilon = 1e-6;
        auto second_colon = tail.find(':');
        if (second_colon != std::string::npos) {
            epsilon = std::stod(tail.substr(second_colon + 1));
            tail = tail.substr(0, second_colon);
        }
        qspec.t0 = std::stod(tail);
        if (kind == "split") {
            qspec.placement = Placement::uniform_split;
        } else if (kind == "cluster") {
            qspec.placement = Placement::clustered;
        } else {
            throw ConfigError("unknown design kind: " + kind);
        }
        return make_q_design(n, qspec, epsilon);
    }
};

std::vector<double> parse_list(const std::string& csv) {
    std::vector<double> values;
    std::stringstream stream(csv);
    std::string item;
    while (std::getline(stream, item, ',')) {
        if (!item.empty()) {
            values.push_back(std::stod(item));
        }
    }
    return values;
}

std::vector<double> uniform_grid(int segments) {
    std::vector<double> grid(static_cast<std::size_t>(segments) + 1);
    for (int i = 0; i <= segments; ++i) {
        grid[static_cast<std::size_t>(i)] =
            static_cast<double>(i) / static_cast<double>(segments);
    }
    return grid;
}

void echo_mc_config(ManifestWriter& manifest, const McConfig& config) {
    manifest.field("replications", config.replications);
    manifest.field("n", static_cast<long>(config.n));
    manifest.field("d", static_cast<long>(config.d));
    manifest.field("alpha", config.alpha);
    manifest.field("seed", static_cast<long>(config.seed));
    manifest.field("noise", config.noise == NoiseLaw::gaussian ? "gaussian" : "uniform");
    manifest.field("execution",
                   config.exec == ExecutionPolicy::parallel ? "parallel" : "serial");
}

int run_size(double alpha, int n, long reps, std::uint64_t seed,
             const DesignOption& design, const std::string& noise,
             const std::string& out, bool serial) {
    McConfig config;
    config.alpha = alpha;
    config.n = n;
    config.replications = reps;
    config.seed = seed;
    config.design = design.resolve(n);
    config.noise = parse_noise(noise);
    config.exec = serial ? ExecutionPolicy::serial : ExecutionPolicy::parallel;
    McReport report = mc_size(config);

    CsvWriter csv(out);
    csv.header({"alpha", "n", "d", "replications", "rejections", "estimate", "stderr"});
    csv.row({alpha, static_cast<double>(n), static_cast<double>(config.d),
             static_cast<double>(report.replications),
             static_cast<double>(report.rejections), report.estimate, report.std_error});

    ManifestWriter manifest(out);
    manifest.field("subcommand", "size");
    echo_mc_config(manifest, config);
    manifest.field("design", design.spec);
    manifest.field("csv", out);
    manifest.field("empirical_size", report.estimate);
    manifest.field("stderr", report.std_error);

    std::cout << "size: " << format_double(report.estimate) << " +/- "
              << format_double(report.std_error) << " (" << report.rejections << "/"
              << report.replications << " rejections) -> " << out << "\n";
    return 0;
}

int run_drift(double q, double c0, double c1, int n, long reps, int grid_segments,
              std::uint64_t seed, const std::string& noise, const std::string& out,
              bool serial) {
    McConfig config;
    config.n = n;
    config.replications = reps;
    config.seed = seed;
    config.scenario = ScenarioStep{q, c0, c1, true};
    config.noise = parse_noise(noise);
    config.exec = serial ? ExecutionPolicy::serial : ExecutionPolicy::parallel;
    McReport report = mc_drift(config, uniform_grid(grid_segments));

    CsvWriter csv(out);
    csv.header({"z", "mean", "stderr", "h_closed_form"});
    for (const auto& point : report.curve) {
        csv.row({point.z, point.mean, point.std_error, point.reference});
    }

    ManifestWriter manifest(out);
    manifest.field("subcommand", "drift");
    echo_mc_config(manifest, config);
    manifest.field("q", q);
    manifest.field("c0", c0);
    manifest.field("c1", c1);
    manifest.field("grid", static_cast<long>(grid_segments));
    manifest.field("csv", out);
    manifest.field("mean_at_1", report.estimate);

    std::cout << "drift: mean at z=1 is " << format_double(report.estimate) << " +/- "
              << format_double(report.std_error) << " -> " << out << "\n";
    return 0;
}

int run_power(const std::string& scenario, double t0, double c0, double c1,
              const DesignOption& design, double alpha, int n, long reps,
              std::uint64_t seed, bool fixed_scale, const std::string& noise,
              const std::string& out, bool serial) {
    McConfig config;
    config.alpha = alpha;
    config.n = n;
    config.replications = reps;
    config.seed = seed;
    config.design = design.resolve(n);
    config.noise = parse_noise(noise);
    config.exec = serial ? ExecutionPolicy::serial : ExecutionPolicy::parallel;
    if (scenario == "step") {
        config.scenario = ScenarioStep{t0, c0, c1, !fixed_scale};
    } else if (scenario == "line") {
        config.scenario = ScenarioLine{t0, c0, c1, !fixed_scale};
    } else {
        throw ConfigError("power: scenario must be step or line");
    }
    McReport report = mc_power(config);

    CsvWriter csv(out);
    csv.header({"scenario", "t0", "c0", "c1", "alpha", "n", "replications",
                "rejections", "power", "stderr"});
    csv.raw_row({scenario, format_double(t0), format_double(c0), format_double(c1),
                 format_double(alpha), std::to_string(n),
                 std::to_string(report.replications), std::to_string(report.rejections),
                 format_double(report.estimate), format_double(report.std_error)});

    ManifestWriter manifest(out);
    manifest.field("subcommand", "power");
    echo_mc_config(manifest, config);
    manifest.field("scenario", scenario);
    manifest.field("t0", t0);
    manifest.field("c0", c0);
    manifest.field("c1", c1);
    manifest.field("scaling", fixed_scale ? "fixed" : "local");
    manifest.field("design", design.spec);
    manifest.field("csv", out);
    manifest.field("power", report.estimate);

    std::cout << "power: " << format_double(report.estimate) << " +/- "
              << format_double(report.std_error) << " -> " << out << "\n";
    return 0;
}

int run_dominance(double q1, double q2, int grid_points, const std::string& out) {
    std::vector<double> grid = grid_points > 0 ? dominance_grid(q1, q2, grid_points / 2)
                                               : dominance_grid(q1, q2);
    Dominance verdict = dominance_compare(q1, q2, grid);

    CsvWriter csv(out);
    csv.header({"z", "curve_q1", "curve_q2"});
    for (double z : grid) {
        csv.row({z, q_design_drift(q1, z), q_design_drift(q2, z)});
    }

    ManifestWriter manifest(out);
    manifest.field("subcommand", "dominance");
    manifest.field("q1", q1);
    manifest.field("q2", q2);
    manifest.field("grid_size", static_cast<long>(grid.size()));
    manifest.field("csv", out);
    manifest.field("verdict", to_string(verdict));

    std::cout << "dominance: q1=" << format_double(q1) << " vs q2=" << format_double(q2)
              << " -> " << to_string(verdict) << " (" << out << ")\n";
    return 0;
}

int run_elaw(const std::string& qgrid_csv, const std::string& out) {
    std::vector<double> qgrid = parse_list(qgrid_csv);
    if (qgrid.empty()) {
        throw ConfigError("elaw: empty q grid");
    }
    ElawReport report = verify_e_inverse_law(qgrid);

    CsvWriter csv(out);
    csv.header({"q1", "q2", "verdict"});
    for (const auto& pair : report.pairs) {
        csv.raw_row({format_double(pair.q1), format_double(pair.q2),
                     to_string(pair.verdict)});
    }

    QMinimum minimum = minimize_q_log_q();
    ManifestWriter manifest(out);
    manifest.field("subcommand", "elaw");
    manifest.field("qgrid", qgrid_csv);
    manifest.field("pairs", static_cast<long>(report.pairs.size()));
    manifest.field("all_dominate", report.all_dominate ? "true" : "false");
    manifest.field("q_star", minimum.q_star);
    manifest.field("q_star_value", minimum.value);
    manifest.field("csv", out);

    std::cout << "elaw: " << report.pairs.size() << " ordered pairs, "
              << (report.all_dominate ? "all lower-q designs dominate"
                                      : "violations found")
              << "; q* = " << format_double(minimum.q_star) << " -> " << out << "\n";
    return report.all_dominate ? 0 : 1;
}

int run_monitor(double alpha, int n, int d) {
    BasisFamily basis = d == 1 ? BasisFamily::constant() : BasisFamily::polynomial(d - 1);
    TestConfig config{alpha, n, d};
    MonitorState state = MonitorState::start(config);

    std::vector<double> init_points;
    std::vector<double> init_responses;
    std::optional<RecursiveEstimator> estimator;

    std::cout << "index,t,y,residual,statistic,crossed\n";
    double t = 0.0;
    double y = 0.0;
    long index = 0;
    const double scale = 1.0 / std::sqrt(static_cast<double>(n - d));
    while (index < n && (std::cin >> t >> y)) {
        ++index;
        if (!estimator) {
            init_points.push_back(t);
            init_responses.push_back(y);
            if (static_cast<int>(init_points.size()) == d) {
                estimator.emplace(basis, init_points, init_responses);
            }
            continue;
        }
        double residual = estimator->update(t, y);
        state = monitor_step(state, residual, config);
        std::cout << index << ',' << format_double(t) << ',' << format_double(y) << ','
                  << format_double(residual) << ','
                  << format_double(state.running_sum * scale) << ','
                  << (state.crossed ? 1 : 0) << "\n";
    }
    std::cout << "# decision: " << (state.crossed ? "reject" : "no-rejection")
              << " residuals=" << state.residual_count;
    if (state.first_crossing_index) {
        std::cout << " first_crossing_index=" << *state.first_crossing_index;
    }
    std::cout << " boundary=" << format_double(state.boundary) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sequential lack-of-fit testing via recursive residual "
                 "cumulative sums, with design comparison tools"};
    app.require_subcommand(1);

    // size
    auto* size_cmd = app.add_subcommand("size", "Empirical size under the null");
    double alpha = 0.05;
    int n = 500;
    long reps = 10000;
    std::uint64_t seed = 1;
    DesignOption design;
    std::string out = "size.csv";
    bool serial = false;
    size_cmd->add_option("--alpha", alpha);
    size_cmd->add_option("--n", n);
    size_cmd->add_option("--reps", reps);
    size_cmd->add_option("--seed", seed);
    size_cmd->add_option("--design", design.spec,
                         "uniform | split:Q@T0 | cluster:Q@T0[:EPS]");
    std::string noise = "gaussian";
    size_cmd->add_option("--noise", noise, "gaussian or uniform error law");
    size_cmd->add_option("--out", out);
    size_cmd->add_flag("--serial", serial, "use the serial reference runner");

    // drift
    auto* drift_cmd =
        app.add_subcommand("drift", "Mean residual path under a local step alternative");
    double q = 0.5;
    double c0 = 1.0;
    double c1 = 0.0;
    int grid = 64;
    std::string drift_out = "drift.csv";
    drift_cmd->add_option("--q", q);
    drift_cmd->add_option("--c0", c0);
    drift_cmd->add_option("--c1", c1);
    drift_cmd->add_option("--n", n);
    drift_cmd->add_option("--reps", reps);
    drift_cmd->add_option("--grid", grid, "number of grid segments on [0,1]");
    drift_cmd->add_option("--seed", seed);
    drift_cmd->add_option("--noise", noise);
    drift_cmd->add_option("--out", drift_out);
    drift_cmd->add_flag("--serial", serial);

    // power
    auto* power_cmd = app.add_subcommand("power", "Rejection rate under an alternative");
    std::string scenario = "step";
    double t0 = 0.5;
    bool fixed_scale = false;
    std::string power_out = "power.csv";
    power_cmd->add_option("--scenario", scenario, "step or line");
    power_cmd->add_option("--t0", t0);
    power_cmd->add_option("--c0", c0);
    power_cmd->add_option("--c1", c1);
    power_cmd->add_option("--design", design.spec);
    power_cmd->add_option("--alpha", alpha);
    power_cmd->add_option("--n", n);
    power_cmd->add_option("--reps", reps);
    power_cmd->add_option("--seed", seed);
    power_cmd->add_flag("--fixed", fixed_scale, "use the alternative unscaled");
    power_cmd->add_option("--noise", noise);
    power_cmd->add_option("--out", power_out);
    power_cmd->add_flag("--serial", serial);

    // dominance
    auto* dom_cmd = app.add_subcommand("dominance", "Compare two q-design drift curves");
    double q1 = 0.4;
    double q2 = 0.7;
    int dom_grid = 0;
    std::string dom_out = "dominance.csv";
    dom_cmd->add_option("--q1", q1)->required();
    dom_cmd->add_option("--q2", q2)->required();
    dom_cmd->add_option("--grid", dom_grid, "total comparison grid points");
    dom_cmd->add_option("--out", dom_out);

    // elaw
    auto* elaw_cmd =
        app.add_subcommand("elaw", "Pairwise dominance over a grid of q values");
    std::string qgrid = "0.37,0.5,0.7,0.9";
    std::string elaw_out = "elaw.csv";
    elaw_cmd->add_option("--qgrid", qgrid, "comma-separated q values")->required();
    elaw_cmd->add_option("--out", elaw_out);

    // monitor
    auto* monitor_cmd = app.add_subcommand(
        "monitor", "Read t y pairs from stdin, print the decision stream");
    int monitor_d = 1;
    monitor_cmd->add_option("--alpha", alpha);
    monitor_cmd->add_option("--n", n)->required();
    monitor_cmd->add_option("--d", monitor_d);

    CLI11_PARSE(app, argc, argv);

    try {
        if (size_cmd->parsed()) {
            return run_size(alpha, n, reps, seed, design, noise, out, serial);
        }
        if (drift_cmd->parsed()) {
            return run_drift(q, c0, c1, n, reps, grid, seed, noise, drift_out, serial);
        }
        if (power_cmd->parsed()) {
            return run_power(scenario, t0, c0, c1, design, alpha, n, reps, seed,
                             fixed_scale, noise, power_out, serial);
        }
        if (dom_cmd->parsed()) {
            return run_dominance(q1, q2, dom_grid, dom_out);
        }
        if (elaw_cmd->parsed()) {
            return run_elaw(qgrid, elaw_out);
        }
        if (monitor_cmd->parsed()) {
            return run_monitor(alpha, n, monitor_d);
        }
    } catch (const seqlof::Error& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 2;
    }
    return 0;
}
