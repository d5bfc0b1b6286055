#pragma once

#include <vector>

namespace seqlof {

// A finite design: sorted points in [0,1], one per planned observation.
struct Design {
    std::vector<double> points;

    static Design uniform(int n); // (i-1)/(n-1), the equispaced design
};

enum class Placement {
    clustered, // s points packed near 0, the rest packed near 1
    uniform_split, // s points equispaced on [0,t0], the rest equispaced on (t0,1]
};

// Descriptor of an asymptotic q-design: the target fraction q of points at
// or below the change point t0, and how to place them at finite n.
struct QDesignSpec {
    double q = 0.5;
    double t0 = 0.5;
    Placement placement = Placement::uniform_split;
};

// Realize a q-design with n points. For the clustered placement, points sit
// on an epsilon-ladder at each end; InfeasiblePlacement is raised when the
// ladder would cross t0 or the two clusters would meet.
Design make_q_design(int n, const QDesignSpec& spec, double epsilon = 1e-6);

// Fraction of design points at or below t0.
double effective_q(const Design& design, double t0);

} // namespace seqlof
