#pragma once

#include <Eigen/Dense>

namespace btcarima::detail {

struct LeastSquaresFit {
  Eigen::VectorXd coef;
  Eigen::VectorXd std_err;  // empty unless requested
  double ssr = 0.0;
};

/// Ordinary least squares via column-pivoted QR. Throws SingularRegression
/// when the design matrix is rank deficient.
LeastSquaresFit least_squares(const Eigen::MatrixXd& design, const Eigen::VectorXd& target,
                              bool with_std_err = false);

} // namespace btcarima::detail
