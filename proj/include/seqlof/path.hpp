#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace seqlof {

// Piecewise-linear function on [0,1], stored at its nodes. Node storage is
// lossless for cumulative-sum paths: the fractional interpolation term of
// the partial-sum operator is exactly linear between nodes.
struct PathFunction {
    std::vector<double> grid;   // strictly increasing, grid.front()==0, grid.back()==1
    std::vector<double> values; // one per node

    double operator()(double z) const;
};

struct PathExtremum {
    double value = 0.0;
    double argmin = 0.0;
};

// Cumulative-sum path of a vector: nodes at i/n, value at i/n is
// a_1 + ... + a_i, value 0 at z=0, linear in between.
PathFunction partial_sum(std::span<const double> a);

// partial_sum scaled by 1/sqrt(m) where m is the residual count.
PathFunction scaled_residual_path(std::span<const double> residuals);

// Exact minimum of a piecewise-linear path; attained at a node, ties
// broken toward the smallest argument.
PathExtremum path_min(const PathFunction& path);

// Random-walk approximation of Brownian motion on [0,1]: the cumulative
// sum of n_steps iid standard normal increments scaled by 1/sqrt(n_steps).
PathFunction simulate_brownian(int n_steps, std::uint64_t seed,
                               std::uint64_t stream_index = 0);

} // namespace seqlof
