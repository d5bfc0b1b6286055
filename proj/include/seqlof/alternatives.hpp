#pragma once

#include <functional>
#include <vector>

#include "seqlof/design.hpp"
#include "seqlof/regression.hpp"
#include "seqlof/rng.hpp"

namespace seqlof {

// Mean function under the alternative, as a plain callable plus the
// structural facts the drift quadrature needs: declared jump/kink
// locations and a bounded-variation flag.
struct GenericAlternative {
    std::function<double(double)> evaluate;
    std::vector<double> breakpoints; // interior discontinuities or kinks
    bool bounded_variation = true;
};

// g(t) = c0 on [0,t0], c1 on (t0,1]. The usual testing story has c0 > c1
// (quality drops after the change point); the reverse is allowed.
struct StepAlternative {
    double t0;
    double c0;
    double c1;

    double operator()(double t) const { return t <= t0 ? c0 : c1; }
    GenericAlternative as_generic() const;
};

// g(t) = c0 on [0,t0], then a straight decline of slope c1 > 0.
struct LineAlternative {
    double t0;
    double c0;
    double c1;

    double operator()(double t) const {
        return t <= t0 ? c0 : c0 + c1 * t0 - c1 * t;
    }
    GenericAlternative as_generic() const;
};

StepAlternative make_step_alternative(double t0, double c0, double c1);
LineAlternative make_line_alternative(double t0, double c0, double c1);

enum class NoiseLaw {
    gaussian,
    uniform, // centered uniform scaled to unit variance
};

// Draw responses y_i = scale * g(t_i) + sigma * eps_i over a design, where
// scale is 1/sqrt(n-d) when `local` (the local-alternative regime) and 1
// otherwise. sigma = 0 gives the noise-free mean path.
ObservationStream apply_local_alternative(const GenericAlternative& g,
                                          const Design& design, int d,
                                          RngStream& rng,
                                          bool local = true,
                                          NoiseLaw law = NoiseLaw::gaussian,
                                          double sigma = 1.0);

} // namespace seqlof
