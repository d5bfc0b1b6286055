#include "seqlof/mc.hpp"

#include <algorithm>
#include <cmath>

#include "seqlof/drift.hpp"
#include "seqlof/errors.hpp"
#include "seqlof/normal.hpp"
#include "seqlof/path.hpp"
#include "seqlof/regression.hpp"
#include "seqlof/rng.hpp"
#include "seqlof/sequential_test.hpp"

namespace seqlof {

namespace {

template <typename Body>
void for_each_replication(long replications, ExecutionPolicy exec, const Body& body) {
    if (exec == ExecutionPolicy::serial) {
        for (long r = 0; r < replications; ++r) {
            body(r);
        }
    } else {
#pragma omp parallel for schedule(dynamic, 16)
        for (long r = 0; r < replications; ++r) {
            body(r);
        }
    }
}

void validate_common(const McConfig& config) {
    if (config.replications < 1) {
        throw ConfigError("mc: replications must be >= 1");
    }
    if (config.n <= config.d) {
        throw ConfigError("mc: n must exceed d");
    }
    if (!(config.alpha > 0.0 && config.alpha < 1.0)) {
        throw ConfigError("mc: alpha outside (0,1)");
    }
    if (config.d < 1) {
        throw ConfigError("mc: d must be >= 1");
    }
}

Design resolve_design(const McConfig& config) {
    if (config.design) {
        if (static_cast<int>(config.design->points.size()) != config.n) {
            throw ConfigError("mc: explicit design size differs from n");
        }
        return *config.design;
    }
    return Design::uniform(config.n);
}

BasisFamily resolve_basis(const McConfig& config) {
    return config.d == 1 ? BasisFamily::constant() : BasisFamily::polynomial(config.d - 1);
}

struct ScenarioMean {
    // Mean value per observation, already scaled for the local regime.
    std::vector<double> values;
    bool is_null = false;
};

ScenarioMean resolve_mean(const McConfig& config, const Design& design) {
    ScenarioMean mean;
    mean.values.assign(design.points.size(), 0.0);
    if (std::holds_alternative<ScenarioNull>(config.scenario)) {
        mean.is_null = true;
        return mean;
    }
    GenericAlternative g;
    bool local = true;
    if (const auto* step = std::get_if<ScenarioStep>(&config.scenario)) {
        g = make_step_alternative(step->t0, step->c0, step->c1).as_generic();
        local = step->local;
    } else {
        const auto& line = std::get<ScenarioLine>(config.scenario);
        g = make_line_alternative(line.t0, line.c0, line.c1).as_generic();
        local = line.local;
    }
    double scale = local ? 1.0 / std::sqrt(static_cast<double>(config.n - config.d)) : 1.0;
    for (std::size_t i = 0; i < design.points.size(); ++i) {
        mean.values[i] = scale * g.evaluate(design.points[i]);
    }
    return mean;
}

// One replication: draw responses, run the recursion, return the residuals.
void draw_residuals(const McConfig& config, const Design& design,
                    const BasisFamily& basis, const ScenarioMean& mean,
                    long replication, std::vector<double>& responses,
                    std::vector<double>& residuals) {
    RngStream rng(config.seed, static_cast<std::uint64_t>(replication));
    responses.resize(design.points.size());
    for (std::size_t i = 0; i < responses.size(); ++i) {
        double noise = config.noise == NoiseLaw::gaussian ? rng.next_normal()
                                                          : rng.next_uniform_unit_variance();
        responses[i] = mean.values[i] + noise;
    }
    const int d = config.d;
    RecursiveEstimator estimator(basis,
                                 std::span(design.points).first(d),
                                 std::span(responses).first(d));
    residuals.clear();
    for (std::size_t i = static_cast<std::size_t>(d); i < responses.size(); ++i) {
        residuals.push_back(estimator.update(design.points[i], responses[i]));
    }
}

McReport proportion_report(const McConfig& config, const std::vector<unsigned char>& flags) {
    McReport report;
    report.config = config;
    report.replications = static_cast<long>(flags.size());
    report.rejections = 0;
    for (unsigned char f : flags) {
        report.rejections += f;
    }
    report.estimate = static_cast<double>(report.rejections) /
                      static_cast<double>(report.replications);
    report.std_error = std::sqrt(report.estimate * (1.0 - report.estimate) /
                                 static_cast<double>(report.replications));
    return report;
}

McReport rejection_rate(const McConfig& config) {
    validate_common(config);
    const Design design = resolve_design(config);
    const BasisFamily basis = resolve_basis(config);
    const ScenarioMean mean = resolve_mean(config, design);
    const double boundary = threshold(config.alpha);
    const double scale = 1.0 / std::sqrt(static_cast<double>(config.n - config.d));

    std::vector<unsigned char> flags(static_cast<std::size_t>(config.replications), 0);
    for_each_replication(config.replications, config.exec, [&](long r) {
        std::vector<double> responses;
        std::vector<double> residuals;
        draw_residuals(config, design, basis, mean, r, responses, residuals);
        double running = 0.0;
        bool crossed = false;
        for (double e : residuals) {
            running += e;
            if (running * scale < boundary) {
                crossed = true;
                break;
            }
        }
        flags[static_cast<std::size_t>(r)] = crossed ? 1 : 0;
    });
    return proportion_report(config, flags);
}

} // namespace

McReport mc_size(const McConfig& config) {
    if (!std::holds_alternative<ScenarioNull>(config.scenario)) {
        throw ConfigError("mc_size: scenario must be null");
    }
    return rejection_rate(config);
}

McReport mc_power(const McConfig& config) {
    if (std::holds_alternative<ScenarioNull>(config.scenario)) {
        throw ConfigError("mc_power: scenario must be an alternative");
    }
    return rejection_rate(config);
}

McReport mc_drift(const McConfig& config, const std::vector<double>& z_grid) {
    const auto* step = std::get_if<ScenarioStep>(&config.scenario);
    if (step == nullptr) {
        throw ConfigError("mc_drift: scenario must be a step alternative");
    }
    if (z_grid.empty()) {
        throw ConfigError("mc_drift: empty grid");
    }
    validate_common(config);

    const Design design = resolve_design(config);
    const BasisFamily basis = resolve_basis(config);
    const ScenarioMean mean = resolve_mean(config, design);

    const std::size_t n_grid = z_grid.size();
    const auto reps = static_cast<std::size_t>(config.replications);
    std::vector<double> samples(reps * n_grid);

    for_each_replication(config.replications, config.exec, [&](long r) {
        std::vector<double> responses;
        std::vector<double> residuals;
        draw_residuals(config, design, basis, mean, r, responses, residuals);
        PathFunction path = scaled_residual_path(residuals);
        double* row = samples.data() + static_cast<std::size_t>(r) * n_grid;
        for (std::size_t j = 0; j < n_grid; ++j) {
            row[j] = path(z_grid[j]);
        }
    });

    McReport report;
    report.config = config;
    report.replications = config.replications;
    const double q_eff = effective_q(design, step->t0);
    report.curve.resize(n_grid);
    for (std::size_t j = 0; j < n_grid; ++j) {
        double sum = 0.0;
        for (std::size_t r = 0; r < reps; ++r) {
            sum += samples[r * n_grid + j];
        }
        double avg = sum / static_cast<double>(reps);
        double sq = 0.0;
        for (std::size_t r = 0; r < reps; ++r) {
            double dev = samples[r * n_grid + j] - avg;
            sq += dev * dev;
        }
        double variance = reps > 1 ? sq / static_cast<double>(reps - 1) : 0.0;
        report.curve[j] = {z_grid[j], avg,
                           std::sqrt(variance / static_cast<double>(reps)),
                           q_eff > 0.0 && q_eff < 1.0
                               ? trend_step_closed_form(q_eff, step->c0, step->c1, z_grid[j])
                               : 0.0};
    }
    report.estimate = report.curve.back().mean;
    report.std_error = report.curve.back().std_error;
    return report;
}

McReport mc_limit_distribution(const McConfig& config, PathFunctional functional) {
    if (!std::holds_alternative<ScenarioNull>(config.scenario)) {
        throw ConfigError("mc_limit_distribution: scenario must be null");
    }
    validate_common(config);

    const Design design = resolve_design(config);
    const BasisFamily basis = resolve_basis(config);
    const ScenarioMean mean = resolve_mean(config, design);
    const double scale = 1.0 / std::sqrt(static_cast<double>(config.n - config.d));

    const auto reps = static_cast<std::size_t>(config.replications);
    std::vector<double> values(reps);
    for_each_replication(config.replications, config.exec, [&](long r) {
        std::vector<double> responses;
        std::vector<double> residuals;
        draw_residuals(config, design, basis, mean, r, responses, residuals);
        double running = 0.0;
        double minimum = 0.0;
        for (double e : residuals) {
            running += e;
            minimum = std::min(minimum, running);
        }
        values[static_cast<std::size_t>(r)] =
            functional == PathFunctional::terminal ? running * scale : minimum * scale;
    });

    McReport report;
    report.config = config;
    report.replications = config.replications;
    if (functional == PathFunctional::terminal) {
        std::vector<double> sorted(values);
        std::sort(sorted.begin(), sorted.end());
        double distance = 0.0;
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            double cdf = normal_cdf(sorted[i]);
            double hi = static_cast<double>(i + 1) / static_cast<double>(sorted.size());
            double lo = static_cast<double>(i) / static_cast<double>(sorted.size());
            distance = std::max({distance, std::abs(hi - cdf), std::abs(cdf - lo)});
        }
        report.ks_distance = distance;
        report.estimate = distance;
    } else {
        const double boundary = threshold(config.alpha);
        long crossings = 0;
        for (double v : values) {
            crossings += v < boundary ? 1 : 0;
        }
        report.rejections = crossings;
        report.crossing_rate =
            static_cast<double>(crossings) / static_cast<double>(config.replications);
        report.estimate = report.crossing_rate;
        report.std_error = std::sqrt(report.estimate * (1.0 - report.estimate) /
                                     static_cast<double>(config.replications));
    }
    return report;
}

McReport mc_brownian_crossing(int n_steps, long replications, double alpha,
                              std::uint64_t seed, ExecutionPolicy exec) {
    if (n_steps < 1 || replications < 1) {
        throw ConfigError("mc_brownian_crossing: bad sizes");
    }
    const double boundary = threshold(alpha);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n_steps));

    std::vector<unsigned char> flags(static_cast<std::size_t>(replications), 0);
    for_each_replication(replications, exec, [&](long r) {
        RngStream rng(seed, static_cast<std::uint64_t>(r));
        double running = 0.0;
        bool crossed = false;
        for (int i = 0; i < n_steps; ++i) {
            running += rng.next_normal();
            if (running * scale < boundary) {
                crossed = true;
                break;
            }
        }
        flags[static_cast<std::size_t>(r)] = crossed ? 1 : 0;
    });

    McConfig echo;
    echo.replications = replications;
    echo.n = n_steps;
    echo.d = 0;
    echo.alpha = alpha;
    echo.seed = seed;
    echo.exec = exec;
    return proportion_report(echo, flags);
}

} // namespace seqlof
