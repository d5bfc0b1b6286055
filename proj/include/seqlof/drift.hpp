#pragma once

#include <functional>
#include <span>

#include "seqlof/alternatives.hpp"
#include "seqlof/path.hpp"

namespace seqlof {

struct QuadratureConfig {
    double tolerance = 1e-9; // absolute error budget per unit length
    int max_depth = 32;
};

// Adaptive composite Simpson on [a,b]. Endpoint samples are pulled a
// relative 1e-9 into the interval, so integrands may be discontinuous at
// the boundary itself. Throws QuadratureFailure when the refinement depth
// is exhausted before the tolerance is met.
double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, const QuadratureConfig& quad = {});

// Limit drift of the scaled residual cumulative-sum process under the
// local alternative g (constant null model, equispaced sampling):
//
//   h(z) = int_0^z g(t) dt - int_0^z (1/s) int_0^s g(t) dt ds
//
// evaluated by cumulative quadrature on the given nodes. Quadrature panels
// split at g's declared breakpoints, and the removable singularity of the
// inner mean at s=0 is handled by continuity. The returned path carries
// nodes at the requested grid (0 and 1 are added when missing).
PathFunction trend_general(const GenericAlternative& g,
                           std::span<const double> z_grid,
                           const QuadratureConfig& quad = {});

// Closed-form drift for the step alternative with change fraction q:
// 0 for z <= q, q (c1 - c0) (ln z - ln q) above.
double trend_step_closed_form(double q, double c0, double c1, double z);

} // namespace seqlof
