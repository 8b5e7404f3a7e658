#include "least_squares.hpp"

#include "btcarima/errors.hpp"

#include <string>

namespace btcarima::detail {

LeastSquaresFit least_squares(const Eigen::MatrixXd& design, const Eigen::VectorXd& target,
                              bool with_std_err) {
  const auto rows = design.rows();
  const auto cols = design.cols();
  if (rows < cols) {
    throw SingularRegression("regression has " + std::to_string(rows) + " rows for " +
                             std::to_string(cols) + " unknowns");
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  qr.setThreshold(1e-10);
  if (qr.rank() < cols) {
    throw SingularRegression("design matrix is rank deficient (rank " + std::to_string(qr.rank()) +
                             " of " + std::to_string(cols) + ")");
  }
  LeastSquaresFit fit;
  fit.coef = qr.solve(target);
  const Eigen::VectorXd resid = target - design * fit.coef;
  fit.ssr = resid.squaredNorm();
  if (with_std_err) {
    if (rows == cols) {
      throw SingularRegression("no residual degrees of freedom for standard errors");
    }
    const double sigma2 = fit.ssr / static_cast<double>(rows - cols);
    const Eigen::MatrixXd gram_inv =
        (design.transpose() * design).ldlt().solve(Eigen::MatrixXd::Identity(cols, cols));
    fit.std_err = (sigma2 * gram_inv.diagonal()).cwiseSqrt();
  }
  return fit;
}

} // namespace btcarima::detail
