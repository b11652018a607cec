#pragma once

#include <Eigen/Core>
#include <optional>

namespace ssmkit {

// Gaussian-model entropy of an ensemble of shape vectors:
//   H = 1/2 * sum_{i=1}^{dim} log(lambda_i + eps)
// where lambda_i are the eigenvalues of the sample covariance (divisor M-1)
// of the columns of `data`, and eps regularizes the log-determinant.
//
// The gradient is taken with the regularizer frozen at the reported eps:
//   dH/d data = (Sigma + eps I)^{-1} Y / (M - 1),  Y = centered data.
// (The centering correction vanishes because the gradient columns already
// sum to zero.)
struct GaussianEntropy {
    double entropy = 0.0;
    double eps = 0.0;
    Eigen::VectorXd eigenvalues; // covariance eigenvalues, descending
    Eigen::MatrixXd gradient;    // dim x M
};

// eps defaults to 1e-6 * trace(Sigma)/dim with an absolute floor of 1e-30,
// so a zero-variance ensemble reports the finite regularization floor.
double default_covariance_eps(double trace, int dim);

// Dual (M x M Gram) route; cost O(dim*M^2). The production path.
GaussianEntropy gaussian_model_entropy(const Eigen::MatrixXd& data,
                                       std::optional<double> eps_override = std::nullopt);

// Dense (dim x dim covariance) route; serial reference kept for testing.
GaussianEntropy gaussian_model_entropy_dense(const Eigen::MatrixXd& data,
                                             std::optional<double> eps_override = std::nullopt);

} // namespace ssmkit
