#pragma once

#include <span>
#include <vector>

#include "seqlof/drift.hpp"
#include "seqlof/path.hpp"

namespace seqlof {

enum class Dominance {
    dominates,    // first curve <= second everywhere, strictly below somewhere
    dominated,    // the mirror image
    incomparable, // curves cross or coincide
};

const char* to_string(Dominance verdict);

// Drift curve of a q-design under a unit step drop, the quantity the
// power comparison orders: -q (ln z - ln q) on (q,1], 0 before.
double q_design_drift(double q, double z);

// Default comparison grid: points accumulating geometrically toward q1 and
// q2 from above (each run ends at 1), plus the kink points themselves.
std::vector<double> dominance_grid(double q1, double q2, int points_per_anchor = 1022);

// Pointwise comparison of two q-design drift curves on a grid.
// `dominates` means the q1-design is uniformly better.
Dominance dominance_compare(double q1, double q2, std::span<const double> grid);
Dominance dominance_compare(double q1, double q2);

struct ElawPair {
    double q1;
    double q2;
    Dominance verdict;
};

struct ElawReport {
    std::vector<ElawPair> pairs; // every ordered pair q_a < q_b from the grid
    bool all_dominate = true;
};

// Checks that smaller q dominates for every ordered pair of the grid;
// meaningful on grids within [1/e, 1).
ElawReport verify_e_inverse_law(std::span<const double> q_grid);

struct QMinimum {
    double q_star;
    double value;
};

// Golden-section minimization of q -> q ln q on (0,1).
QMinimum minimize_q_log_q();

struct LineCompareReport {
    PathFunction tail_uniform_drift; // all points uniform on [t0,1]
    PathFunction q_design_drift;     // fraction q at or below t0, rest uniform on [t0,1]
    Dominance verdict;               // dominates = tail-uniform design uniformly better
};

// Compares the design with every point uniform on [t0,1] against a
// q-design whose above-t0 mass is uniform on [t0,1], under the straight
// line alternative with slope c1. Both limit drifts are computed by
// quadrature of the time-rescaled mean each design actually sees.
LineCompareReport line_design_compare(double t0, double q,
                                      std::span<const double> z_grid,
                                      double c1 = 1.0,
                                      const QuadratureConfig& quad = {});

} // namespace seqlof
