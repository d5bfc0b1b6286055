#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "seqlof/alternatives.hpp"
#include "seqlof/design.hpp"

namespace seqlof {

// Replications are embarrassingly parallel. Every replication draws from
// its own counter-based stream keyed by (seed, index) and writes into its
// own slot, and aggregation is a sequential reduction over slots, so serial
// and parallel execution produce identical bytes.
enum class ExecutionPolicy {
    serial,   // reference implementation, kept for testing
    parallel, // OpenMP
};

struct ScenarioNull {};

struct ScenarioStep {
    double t0 = 0.5;
    double c0 = 1.0;
    double c1 = 0.0;
    bool local = true; // scale the mean by 1/sqrt(n-d)
};

struct ScenarioLine {
    double t0 = 0.0;
    double c0 = 0.0;
    double c1 = 1.0;
    bool local = true;
};

using Scenario = std::variant<ScenarioNull, ScenarioStep, ScenarioLine>;

struct McConfig {
    long replications = 1000;
    int n = 500;
    int d = 1; // d = 1 is the constant model; d > 1 uses the polynomial basis
    double alpha = 0.05;
    std::uint64_t seed = 1;
    Scenario scenario = ScenarioNull{};
    std::optional<Design> design; // default: uniform on [0,1]
    NoiseLaw noise = NoiseLaw::gaussian;
    ExecutionPolicy exec = ExecutionPolicy::parallel;
};

struct CurvePoint {
    double z = 0.0;
    double mean = 0.0;
    double std_error = 0.0;
    double reference = 0.0; // closed-form drift where one exists
};

struct McReport {
    McConfig config;
    long replications = 0;
    long rejections = 0;
    double estimate = 0.0;
    double std_error = 0.0;
    std::vector<CurvePoint> curve;
    double ks_distance = 0.0;    // mc_limit_distribution, terminal functional
    double crossing_rate = 0.0;  // mc_limit_distribution, minimum functional
};

// Empirical size of the boundary test under the null.
McReport mc_size(const McConfig& config);

// Mean scaled residual cumulative-sum path under a local step alternative,
// with the closed-form drift as reference column.
McReport mc_drift(const McConfig& config, const std::vector<double>& z_grid);

// Rejection rate under a step or line alternative.
McReport mc_power(const McConfig& config);

enum class PathFunctional {
    terminal, // path value at z=1, compared against the standard normal
    minimum,  // path minimum, compared against the boundary-crossing law
};

McReport mc_limit_distribution(const McConfig& config, PathFunctional functional);

// Frequency with which a simulated random-walk Brownian path dips below
// the alpha-level boundary.
McReport mc_brownian_crossing(int n_steps, long replications, double alpha,
                              std::uint64_t seed,
                              ExecutionPolicy exec = ExecutionPolicy::parallel);

} // namespace seqlof
