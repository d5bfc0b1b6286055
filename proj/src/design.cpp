#include "seqlof/design.hpp"

#include <algorithm>
#include <cmath>

#include "seqlof/errors.hpp"

namespace seqlof {

Design Design::uniform(int n) {
    if (n < 2) {
        throw DomainError("Design::uniform: need n >= 2");
    }
    Design design;
    design.points.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        design.points[static_cast<std::size_t>(i)] =
            static_cast<double>(i) / static_cast<double>(n - 1);
    }
    return design;
}

Design make_q_design(int n, const QDesignSpec& spec, double epsilon) {
    if (n < 2) {
        throw DomainError("make_q_design: need n >= 2");
    }
    if (!(spec.q >= 0.0 && spec.q <= 1.0)) {
        throw DomainError("make_q_design: q outside [0,1]");
    }
    if (!(spec.t0 > 0.0 && spec.t0 < 1.0)) {
        throw DomainError("make_q_design: t0 outside (0,1)");
    }
    const int s = static_cast<int>(std::lround(spec.q * n));
    if (s < 1 || s > n - 1) {
        throw InfeasiblePlacement("make_q_design: q*n rounds outside [1, n-1]");
    }

    Design design;
    design.points.reserve(static_cast<std::size_t>(n));

    if (spec.placement == Placement::clustered) {
        double low_top = (s - 1) * epsilon;          // largest point of the low cluster
        double high_bottom = 1.0 - (n - s - 1) * epsilon; // smallest point of the high cluster
        if (low_top > spec.t0) {
            throw InfeasiblePlacement("make_q_design: low cluster crosses t0");
        }
        if (!(low_top < high_bottom)) {
            throw InfeasiblePlacement("make_q_design: clusters overlap");
        }
        if (!(high_bottom > spec.t0)) {
            throw InfeasiblePlacement("make_q_design: high cluster falls at or below t0");
        }
        for (int i = 0; i < s; ++i) {
            design.points.push_back(i * epsilon);
        }
        for (int i = 0; i < n - s; ++i) {
            design.points.push_back(high_bottom + i * epsilon);
        }
    } else {
        if (s == 1) {
            design.points.push_back(spec.t0);
        } else {
            for (int i = 0; i < s; ++i) {
                design.points.push_back(spec.t0 * static_cast<double>(i) /
                                        static_cast<double>(s - 1));
            }
        }
        const int rest = n - s;
        for (int i = 1; i <= rest; ++i) {
            design.points.push_back(spec.t0 +
                                    (1.0 - spec.t0) * static_cast<double>(i) /
                                        static_cast<double>(rest));
        }
    }
    return design;
}

double effective_q(const Design& design, double t0) {
    if (design.points.empty()) {
        throw EmptyInput("effective_q: empty design");
    }
    auto count = std::upper_bound(design.points.begin(), design.points.end(), t0) -
                 design.points.begin();
    return static_cast<double>(count) / static_cast<double>(design.points.size());
}

} // namespace seqlof
