#include "seqlof/path.hpp"

#include <algorithm>
#include <cmath>

#include "seqlof/errors.hpp"
#include "seqlof/rng.hpp"

namespace seqlof {

double PathFunction::operator()(double z) const {
    if (!(z >= 0.0 && z <= 1.0)) {
        throw DomainError("PathFunction: argument outside [0,1]");
    }
    auto it = std::upper_bound(grid.begin(), grid.end(), z);
    if (it == grid.begin()) {
        return values.front();
    }
    if (it == grid.end()) {
        return values.back();
    }
    auto hi = static_cast<std::size_t>(it - grid.begin());
    auto lo = hi - 1;
    double u = (z - grid[lo]) / (grid[hi] - grid[lo]);
    return values[lo] + u * (values[hi] - values[lo]);
}

PathFunction partial_sum(std::span<const double> a) {
    if (a.empty()) {
        throw EmptyInput("partial_sum: empty vector");
    }
    const auto n = a.size();
    PathFunction path;
    path.grid.resize(n + 1);
    path.values.resize(n + 1);
    path.grid[0] = 0.0;
    path.values[0] = 0.0;
    double running = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        running += a[i];
        path.grid[i + 1] = static_cast<double>(i + 1) / static_cast<double>(n);
        path.values[i + 1] = running;
    }
    path.grid[n] = 1.0;
    return path;
}

PathFunction scaled_residual_path(std::span<const double> residuals) {
    PathFunction path = partial_sum(residuals);
    double scale = 1.0 / std::sqrt(static_cast<double>(residuals.size()));
    for (double& v : path.values) {
        v *= scale;
    }
    return path;
}

PathExtremum path_min(const PathFunction& path) {
    PathExtremum result{path.values.front(), path.grid.front()};
    for (std::size_t i = 1; i < path.values.size(); ++i) {
        if (path.values[i] < result.value) {
            result.value = path.values[i];
            result.argmin = path.grid[i];
        }
    }
    return result;
}

PathFunction simulate_brownian(int n_steps, std::uint64_t seed, std::uint64_t stream_index) {
    if (n_steps < 1) {
        throw DomainError("simulate_brownian: n_steps must be >= 1");
    }
    RngStream rng(seed, stream_index);
    std::vector<double> increments(static_cast<std::size_t>(n_steps));
    for (double& x : increments) {
        x = rng.next_normal();
    }
    PathFunction path = partial_sum(increments);
    double scale = 1.0 / std::sqrt(static_cast<double>(n_steps));
    for (double& v : path.values) {
        v *= scale;
    }
    return path;
}

} // namespace seqlof
