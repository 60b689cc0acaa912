#pragma once

#include <Eigen/Dense>

#include <cstddef>

namespace utdd::stationarity {

struct OlsFit {
    Eigen::VectorXd coefficients;
    Eigen::VectorXd standard_errors;
    Eigen::VectorXd residuals;
    /// SSE / (n - p)
    double residual_variance = 0.0;
    std::size_t degrees_of_freedom = 0;
};

/// Ordinary least squares through a column-pivoted Householder QR of the design.
/// Throws DegenerateInputError if the design is rank deficient or the fit is exact
/// (zero residual variance leaves t-ratios undefined); std::invalid_argument on shape errors.
OlsFit ols(const Eigen::MatrixXd& design, const Eigen::VectorXd& response);

} // namespace utdd::stationarity
