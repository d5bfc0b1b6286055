#pragma once

#include <functional>

#include <Eigen/Dense>

namespace seqlof {

// A family of known regression functions f_1,...,f_d on [0,1].
// The evaluator must be pure: equal t, equal vector.
struct BasisFamily {
    int dimension = 1;
    std::function<Eigen::VectorXd(double)> evaluate;

    // f(t) = (1): the constant model.
    static BasisFamily constant() {
        return {1, [](double) { return Eigen::VectorXd::Ones(1); }};
    }

    // f(t) = (1, t, ..., t^degree).
    static BasisFamily polynomial(int degree) {
        const int d = degree + 1;
        return {d, [d](double t) {
                    Eigen::VectorXd v(d);
                    double power = 1.0;
                    for (int k = 0; k < d; ++k) {
                        v[k] = power;
                        power *= t;
                    }
                    return v;
                }};
    }

    // f(t) = (1, t).
    static BasisFamily line() { return polynomial(1); }
};

} // namespace seqlof
