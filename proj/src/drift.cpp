#include "seqlof/drift.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "seqlof/errors.hpp"

namespace seqlof {

namespace {

constexpr double kEdgeInset = 1e-9; // relative endpoint inset per panel

double simpson(double a, double fa, double fm, double b, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& f, double a, double fa,
                     double b, double fb, double m, double fm, double whole,
                     double tol, int depth) {
    double lm = 0.5 * (a + m);
    double rm = 0.5 * (m + b);
    double flm = f(lm);
    double frm = f(rm);
    double left = simpson(a, fa, flm, m, fm);
    double right = simpson(m, fm, frm, b, fb);
    double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    if (depth <= 0) {
        throw QuadratureFailure("integrate_adaptive: refinement depth exhausted");
    }
    return adaptive_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           adaptive_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

} // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, const QuadratureConfig& quad) {
    if (!(b >= a)) {
        throw DomainError("integrate_adaptive: b < a");
    }
    double width = b - a;
    if (width == 0.0) {
        return 0.0;
    }
    double inset = kEdgeInset * width;
    double fa = f(a + inset);
    double fb = f(b - inset);
    double m = 0.5 * (a + b);
    double fm = f(m);
    double whole = simpson(a, fa, fm, b, fb);
    double tol = quad.tolerance * width;
    return adaptive_step(f, a, fa, b, fb, m, fm, whole, tol, quad.max_depth);
}

PathFunction trend_general(const GenericAlternative& g,
                           std::span<const double> z_grid,
                           const QuadratureConfig& quad) {
    if (z_grid.empty()) {
        throw EmptyInput("trend_general: empty grid");
    }
    for (double z : z_grid) {
        if (!(z >= 0.0 && z <= 1.0)) {
            throw DomainError("trend_general: grid node outside [0,1]");
        }
    }

    // Panel edges: requested nodes plus declared breakpoints, with 0 and 1.
    std::vector<double> edges(z_grid.begin(), z_grid.end());
    edges.push_back(0.0);
    edges.push_back(1.0);
    for (double b : g.breakpoints) {
        if (b > 0.0 && b < 1.0) {
            edges.push_back(b);
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    const std::size_t k = edges.size();
    std::vector<double> outer_integral(k, 0.0); // of g
    std::vector<double> mean_integral(k, 0.0);  // of s -> (1/s) int_0^s g

    for (std::size_t i = 1; i < k; ++i) {
        double left = edges[i - 1];
        double right = edges[i];
        outer_integral[i] =
            outer_integral[i - 1] + integrate_adaptive(g.evaluate, left, right, quad);

        double base = outer_integral[i - 1];
        auto running_mean = [&](double s) {
            // F(s)/s; as s -> 0 this tends to g(0+) since F(s) ~ g(0+) s,
            // and panel insets keep s strictly positive.
            double f_of_s = base + integrate_adaptive(g.evaluate, left, s, quad);
            return f_of_s / s;
        };
        mean_integral[i] =
            mean_integral[i - 1] + integrate_adaptive(running_mean, left, right, quad);
    }

    // Assemble h on the requested grid (plus 0/1 which the path type needs).
    std::vector<double> nodes(z_grid.begin(), z_grid.end());
    nodes.push_back(0.0);
    nodes.push_back(1.0);
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());

    PathFunction path;
    path.grid = nodes;
    path.values.resize(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        auto it = std::lower_bound(edges.begin(), edges.end(), nodes[i]);
        auto idx = static_cast<std::size_t>(it - edges.begin());
        path.values[i] = outer_integral[idx] - mean_integral[idx];
    }
    return path;
}

double trend_step_closed_form(double q, double c0, double c1, double z) {
    if (!(q > 0.0 && q < 1.0)) {
        throw DomainError("trend_step_closed_form: q outside (0,1)");
    }
    if (!(z >= 0.0 && z <= 1.0)) {
        throw DomainError("trend_step_closed_form: z outside [0,1]");
    }
    if (z <= q) {
        return 0.0;
    }
    return q * (c1 - c0) * (std::log(z) - std::log(q));
}

} // namespace seqlof
