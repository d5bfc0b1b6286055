#include "seqlof/alternatives.hpp"

#include <cmath>
#include <iostream>

#include "seqlof/errors.hpp"

namespace seqlof {

GenericAlternative StepAlternative::as_generic() const {
    StepAlternative copy = *this;
    return {[copy](double t) { return copy(t); }, {t0}, true};
}

GenericAlternative LineAlternative::as_generic() const {
    LineAlternative copy = *this;
    return {[copy](double t) { return copy(t); }, {t0}, true};
}

StepAlternative make_step_alternative(double t0, double c0, double c1) {
    if (!(t0 > 0.0 && t0 < 1.0)) {
        throw DomainError("StepAlternative: t0 must lie strictly inside (0,1)");
    }
    if (!(c0 > c1)) {
        std::cerr << "seqlof: warning: step alternative with c0 <= c1 gives a "
                     "nonnegative trend; the one-sided test looks for negative trends\n";
    }
    return {t0, c0, c1};
}

LineAlternative make_line_alternative(double t0, double c0, double c1) {
    if (!(t0 >= 0.0 && t0 < 1.0)) {
        throw DomainError("LineAlternative: t0 must lie in [0,1)");
    }
    if (!(c1 > 0.0)) {
        throw DomainError("LineAlternative: slope c1 must be positive");
    }
    return {t0, c0, c1};
}

ObservationStream apply_local_alternative(const GenericAlternative& g,
                                          const Design& design, int d,
                                          RngStream& rng, bool local,
                                          NoiseLaw law, double sigma) {
    const auto n = static_cast<long>(design.points.size());
    if (n <= d) {
        throw DomainError("apply_local_alternative: design smaller than model dimension");
    }
    double scale = local ? 1.0 / std::sqrt(static_cast<double>(n - d)) : 1.0;

    ObservationStream stream;
    stream.points = design.points;
    stream.responses.resize(design.points.size());
    for (std::size_t i = 0; i < stream.responses.size(); ++i) {
        double noise = 0.0;
        if (sigma != 0.0) {
            noise = sigma * (law == NoiseLaw::gaussian ? rng.next_normal()
                                                       : rng.next_uniform_unit_variance());
        }
        stream.responses[i] = scale * g.evaluate(design.points[i]) + noise;
    }
    return stream;
}

} // namespace seqlof
