#include "seqlof/regression.hpp"

#include <cmath>

#include "seqlof/errors.hpp"

namespace seqlof {

namespace {

Eigen::MatrixXd design_matrix(const BasisFamily& basis, std::span<const double> points) {
    Eigen::MatrixXd X(points.size(), basis.dimension);
    for (Eigen::Index i = 0; i < X.rows(); ++i) {
        X.row(i) = basis.evaluate(points[i]).transpose();
    }
    return X;
}

void check_point_in_unit_interval(double t) {
    if (!(t >= 0.0 && t <= 1.0)) {
        throw DomainError("design point outside [0,1]");
    }
}

} // namespace

RecursionState init_state(const BasisFamily& basis,
                          std::span<const double> points,
                          std::span<const double> responses) {
    const int d = basis.dimension;
    if (static_cast<int>(points.size()) != d || static_cast<int>(responses.size()) != d) {
        throw DomainError("init_state: need exactly d points and responses");
    }
    for (double t : points) {
        check_point_in_unit_interval(t);
    }
    Eigen::MatrixXd X = design_matrix(basis, points);

    Eigen::PartialPivLU<Eigen::MatrixXd> lu(X);
    double max_row_norm = X.rowwise().norm().maxCoeff();
    Eigen::VectorXd pivots = lu.matrixLU().diagonal().cwiseAbs();
    if (pivots.minCoeff() < 1e-10 * max_row_norm) {
        throw SingularInitialDesign("init_state: first d design points are numerically singular");
    }

    RecursionState state;
    state.count = d;
    Eigen::MatrixXd x_inv = lu.inverse();
    state.inv_gram = x_inv * x_inv.transpose(); // (X'X)^-1 = X^-1 X^-T for square X
    state.beta_hat = x_inv * Eigen::Map<const Eigen::VectorXd>(responses.data(), d);
    return state;
}

namespace detail {

double update_in_place(RecursionState& state, const Eigen::VectorXd& x, double y,
                       Eigen::VectorXd& gram_x_scratch) {
    gram_x_scratch.noalias() = state.inv_gram * x;
    double leverage = x.dot(gram_x_scratch);    // f' (X'X)^-1 f >= 0
    double denom_sq = 1.0 + leverage;
    double residual = (y - x.dot(state.beta_hat)) / std::sqrt(denom_sq);

    // Sherman-Morrison for the new inverse Gram, then the gain step.
    state.inv_gram.noalias() -= (gram_x_scratch * gram_x_scratch.transpose()) / denom_sq;
    double innovation = y - x.dot(state.beta_hat);
    state.beta_hat.noalias() += gram_x_scratch * (innovation / denom_sq);
    state.count += 1;
    return residual;
}

} // namespace detail

std::pair<RecursionState, double> update(const RecursionState& state,
                                         const BasisFamily& basis,
                                         double t_next, double y_next) {
    check_point_in_unit_interval(t_next);
    RecursionState next = state;
    Eigen::VectorXd x = basis.evaluate(t_next);
    Eigen::VectorXd scratch(x.size());
    double residual = detail::update_in_place(next, x, y_next, scratch);
    return {std::move(next), residual};
}

std::vector<double> batch_residuals(const ObservationStream& stream,
                                    const BasisFamily& basis) {
    const int d = basis.dimension;
    const auto n = static_cast<long>(stream.points.size());
    if (stream.points.size() != stream.responses.size()) {
        throw DomainError("batch_residuals: points/responses length mismatch");
    }
    if (n <= d) {
        throw DomainError("batch_residuals: need more than d observations");
    }
    for (std::size_t i = 1; i < stream.points.size(); ++i) {
        if (stream.points[i] < stream.points[i - 1]) {
            throw DomainError("batch_residuals: design points must be sorted");
        }
    }

    RecursiveEstimator estimator(basis,
                                 std::span(stream.points).first(d),
                                 std::span(stream.responses).first(d));
    std::vector<double> residuals;
    residuals.reserve(n - d);
    for (long i = d; i < n; ++i) {
        residuals.push_back(estimator.update(stream.points[i], stream.responses[i]));
    }
    return residuals;
}

Eigen::VectorXd batch_ols(std::span<const double> points,
                          std::span<const double> responses,
                          const BasisFamily& basis) {
    if (points.size() != responses.size()) {
        throw DomainError("batch_ols: points/responses length mismatch");
    }
    if (static_cast<int>(points.size()) < basis.dimension) {
        throw DomainError("batch_ols: fewer observations than coefficients");
    }
    Eigen::MatrixXd X = design_matrix(basis, points);
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(X);
    if (qr.rank() < basis.dimension) {
        throw SingularDesign("batch_ols: design matrix is rank deficient");
    }
    return qr.solve(Eigen::Map<const Eigen::VectorXd>(responses.data(), responses.size()));
}

double estimate_sigma(std::span<const double> residuals) {
    if (residuals.empty()) {
        throw EmptyInput("estimate_sigma: no residuals");
    }
    double sum_sq = 0.0;
    for (double e : residuals) {
        sum_sq += e * e;
    }
    return std::sqrt(sum_sq / static_cast<double>(residuals.size()));
}

RecursiveEstimator::RecursiveEstimator(const BasisFamily& basis,
                                       std::span<const double> points,
                                       std::span<const double> responses)
    : basis_(basis),
      state_(init_state(basis, points, responses)),
      x_(basis.dimension),
      gram_x_(basis.dimension) {}

double RecursiveEstimator::update(double t_next, double y_next) {
    check_point_in_unit_interval(t_next);
    x_ = basis_.evaluate(t_next);
    return detail::update_in_place(state_, x_, y_next, gram_x_);
}

} // namespace seqlof
