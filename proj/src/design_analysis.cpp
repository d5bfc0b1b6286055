#include "seqlof/design_analysis.hpp"

#include <algorithm>
#include <cmath>

#include "seqlof/errors.hpp"

namespace seqlof {

const char* to_string(Dominance verdict) {
    switch (verdict) {
    case Dominance::dominates:
        return "dominates";
    case Dominance::dominated:
        return "dominated";
    default:
        return "incomparable";
    }
}

double q_design_drift(double q, double z) {
    if (!(q > 0.0 && q < 1.0)) {
        throw DomainError("q_design_drift: q outside (0,1)");
    }
    if (!(z > 0.0 && z <= 1.0)) {
        throw DomainError("q_design_drift: z outside (0,1]");
    }
    if (z <= q) {
        return 0.0;
    }
    return -q * (std::log(z) - std::log(q));
}

std::vector<double> dominance_grid(double q1, double q2, int points_per_anchor) {
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(2 * points_per_anchor) + 4);
    // Geometric approach toward each kink from above; the j=0 point is 1.
    const double ratio = std::exp(std::log(1e-9) / (points_per_anchor - 1));
    for (double anchor : {q1, q2}) {
        double span = 1.0 - anchor;
        double step = 1.0;
        for (int j = 0; j < points_per_anchor; ++j) {
            grid.push_back(anchor + span * step);
            step *= ratio;
        }
        grid.push_back(anchor);
    }
    grid.push_back(0.5 * (q1 + q2));
    grid.push_back(1.0);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    // The comparison domain is (0,1].
    while (!grid.empty() && grid.front() <= 0.0) {
        grid.erase(grid.begin());
    }
    return grid;
}

namespace {

Dominance compare_curves(std::span<const double> first, std::span<const double> second,
                         double tolerance) {
    bool first_below_somewhere = false;
    bool second_below_somewhere = false;
    bool first_above_somewhere = false;
    bool second_above_somewhere = false;
    for (std::size_t i = 0; i < first.size(); ++i) {
        double diff = first[i] - second[i];
        if (diff < -tolerance) {
            first_below_somewhere = true;
            second_above_somewhere = true;
        } else if (diff > tolerance) {
            second_below_somewhere = true;
            first_above_somewhere = true;
        }
    }
    if (first_below_somewhere && !first_above_somewhere) {
        return Dominance::dominates;
    }
    if (second_below_somewhere && !second_above_somewhere) {
        return Dominance::dominated;
    }
    return Dominance::incomparable;
}

} // namespace

Dominance dominance_compare(double q1, double q2, std::span<const double> grid) {
    if (!(q1 > 0.0 && q1 < 1.0) || !(q2 > 0.0 && q2 < 1.0)) {
        throw DomainError("dominance_compare: q outside (0,1)");
    }
    std::vector<double> first(grid.size());
    std::vector<double> second(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        first[i] = q_design_drift(q1, grid[i]);
        second[i] = q_design_drift(q2, grid[i]);
    }
    return compare_curves(first, second, 1e-12);
}

Dominance dominance_compare(double q1, double q2) {
    auto grid = dominance_grid(q1, q2);
    return dominance_compare(q1, q2, grid);
}

ElawReport verify_e_inverse_law(std::span<const double> q_grid) {
    std::vector<double> sorted(q_grid.begin(), q_grid.end());
    std::sort(sorted.begin(), sorted.end());
    ElawReport report;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        for (std::size_t j = i + 1; j < sorted.size(); ++j) {
            if (sorted[i] == sorted[j]) {
                continue;
            }
            Dominance verdict = dominance_compare(sorted[i], sorted[j]);
            report.pairs.push_back({sorted[i], sorted[j], verdict});
            if (verdict != Dominance::dominates) {
                report.all_dominate = false;
            }
        }
    }
    return report;
}

QMinimum minimize_q_log_q() {
    auto f = [](double q) { return q * std::log(q); };
    double lo = 1e-12;
    double hi = 1.0 - 1e-12;
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = hi - inv_phi * (hi - lo);
    double b = lo + inv_phi * (hi - lo);
    double fa = f(a);
    double fb = f(b);
    while (hi - lo > 1e-10) {
        if (fa < fb) {
            hi = b;
            b = a;
            fb = fa;
            a = hi - inv_phi * (hi - lo);
            fa = f(a);
        } else {
            lo = a;
            a = b;
            fa = fb;
            b = lo + inv_phi * (hi - lo);
            fb = f(b);
        }
    }
    double q_star = 0.5 * (lo + hi);
    return {q_star, f(q_star)};
}

LineCompareReport line_design_compare(double t0, double q,
                                      std::span<const double> z_grid,
                                      double c1, const QuadratureConfig& quad) {
    if (!(t0 >= 0.0 && t0 < 1.0)) {
        throw DomainError("line_design_compare: t0 outside [0,1)");
    }
    if (!(q > 0.0 && q < 1.0)) {
        throw DomainError("line_design_compare: q outside (0,1)");
    }
    if (!(c1 >= 0.0)) {
        throw DomainError("line_design_compare: negative slope");
    }

    // Mean decline as a function of observation fraction u. A design whose
    // first fraction `mass` of points sits at or below t0 and whose rest is
    // uniform on [t0,1] sees the flat segment until u = mass, then the line
    // traversed at rate (1-t0)/(1-mass).
    auto rescaled = [&](double mass) {
        double slope = c1 * (1.0 - t0) / (1.0 - mass);
        GenericAlternative g;
        g.evaluate = [mass, slope](double u) {
            return u <= mass ? 0.0 : -slope * (u - mass);
        };
        if (mass > 0.0) {
            g.breakpoints = {mass};
        }
        return g;
    };

    LineCompareReport report;
    report.tail_uniform_drift = trend_general(rescaled(0.0), z_grid, quad);
    report.q_design_drift = trend_general(rescaled(q), z_grid, quad);
    // Comparison tolerance sits above quadrature error, below real effects.
    double tolerance = std::max(1e-9, 10.0 * quad.tolerance);
    report.verdict = compare_curves(report.tail_uniform_drift.values,
                                    report.q_design_drift.values, tolerance);
    return report;
}

} // namespace seqlof
