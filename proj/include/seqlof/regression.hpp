#pragma once

#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "seqlof/basis.hpp"

namespace seqlof {

// Observations in design-point order: t_1 <= ... <= t_n with responses.
struct ObservationStream {
    std::vector<double> points;
    std::vector<double> responses;
};

// Running least-squares state after `count` observations: the inverse
// cross-product matrix (X'X)^-1 and the current coefficient estimate.
// A value type; updates return a new state.
struct RecursionState {
    long count = 0;
    Eigen::MatrixXd inv_gram;
    Eigen::VectorXd beta_hat;
};

// Exact least-squares fit on the first d observations. The d x d design
// matrix must be invertible: a pivot of its LU factorization below
// 1e-10 * (max row norm) raises SingularInitialDesign.
RecursionState init_state(const BasisFamily& basis,
                          std::span<const double> points,
                          std::span<const double> responses);

// One recursion step: returns the standardized one-step-ahead prediction
// error e = (y - f(t)'beta) / sqrt(1 + f(t)' (X'X)^-1 f(t)) and the state
// advanced by a rank-one (Sherman-Morrison) update of the inverse Gram.
std::pair<RecursionState, double> update(const RecursionState& state,
                                         const BasisFamily& basis,
                                         double t_next, double y_next);

// All n-d recursive residuals of a stream in one call.
std::vector<double> batch_residuals(const ObservationStream& stream,
                                    const BasisFamily& basis);

// Ordinary least squares on the full data; the independent cross-check for
// the recursion. Throws SingularDesign on rank deficiency.
Eigen::VectorXd batch_ols(std::span<const double> points,
                          std::span<const double> responses,
                          const BasisFamily& basis);

// sqrt of the mean squared recursive residual; consistent for sigma under
// the null with unit-variance standardization. Never applied implicitly.
double estimate_sigma(std::span<const double> residuals);

// Stateful wrapper around the same recursion math with preallocated
// scratch, for tight Monte Carlo loops.
class RecursiveEstimator {
public:
    RecursiveEstimator(const BasisFamily& basis,
                       std::span<const double> points,
                       std::span<const double> responses);

    // Consume one observation, return its recursive residual.
    double update(double t_next, double y_next);

    const RecursionState& state() const { return state_; }

private:
    BasisFamily basis_;
    RecursionState state_;
    Eigen::VectorXd x_;
    Eigen::VectorXd gram_x_;
};

namespace detail {
// Shared core of update() and RecursiveEstimator::update().
double update_in_place(RecursionState& state, const Eigen::VectorXd& x, double y,
                       Eigen::VectorXd& gram_x_scratch);
} // namespace detail

} // namespace seqlof
