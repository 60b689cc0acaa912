#include "utdd/stationarity/ols.hpp"

#include "utdd/core/errors.hpp"

#include <stdexcept>

namespace utdd::stationarity {

namespace {
constexpr double kRankThreshold = 1e-12;
constexpr double kExactFitTolerance = 1e-24;
} // namespace

OlsFit ols(const Eigen::MatrixXd& design, const Eigen::VectorXd& response) {
    const auto n = design.rows();
    const auto p = design.cols();
    if (response.size() != n) {
        throw std::invalid_argument("OLS response length does not match design rows");
    }
    if (p == 0 || n <= p) {
        throw std::invalid_argument("OLS needs more observations than regressors");
    }

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
    qr.setThreshold(kRankThreshold);
    if (qr.rank() < p) {
        throw DegenerateInputError("OLS design matrix is rank deficient");
    }

    OlsFit fit;
    fit.coefficients = qr.solve(response);
    fit.residuals = response - design * fit.coefficients;
    fit.degrees_of_freedom = static_cast<std::size_t>(n - p);
    const double sse = fit.residuals.squaredNorm();
    if (sse <= kExactFitTolerance * std::max(1.0, response.squaredNorm())) {
        throw DegenerateInputError("OLS fit is exact; residual variance is zero");
    }
    fit.residual_variance = sse / static_cast<double>(fit.degrees_of_freedom);

    // (X'X)^-1 = P R^-1 R^-T P'
    const Eigen::MatrixXd r = qr.matrixR().topLeftCorner(p, p).triangularView<Eigen::Upper>();
    const Eigen::MatrixXd r_inv =
        r.triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(p, p));
    const Eigen::MatrixXd unpermuted = r_inv * r_inv.transpose();
    const Eigen::MatrixXd xtx_inv = qr.colsPermutation() * unpermuted * qr.colsPermutation().transpose();
    fit.standard_errors = (fit.residual_variance * xtx_inv.diagonal()).cwiseSqrt();
    return fit;
}

} // namespace utdd::stationarity
