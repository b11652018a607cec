#include "ssmkit/gaussian_entropy.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "ssmkit/error.hpp"

namespace ssmkit {

double default_covariance_eps(double trace, int dim) {
    const double eps = 1e-6 * trace / static_cast<double>(dim);
    return std::max(eps, 1e-30);
}

GaussianEntropy gaussian_model_entropy(const Eigen::MatrixXd& data,
                                       std::optional<double> eps_override) {
    const Eigen::Index dim = data.rows();
    const Eigen::Index m = data.cols();
    if (m < 2) throw ValidationError("ensemble entropy requires at least 2 shapes");

    const Eigen::VectorXd mean = data.rowwise().mean();
    const Eigen::MatrixXd centered = data.colwise() - mean;

    const Eigen::MatrixXd gram = centered.transpose() * centered; // M x M
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram);
    if (eig.info() != Eigen::Success) throw RuntimeError("Gram eigendecomposition failed");

    const double divisor = static_cast<double>(m - 1);
    GaussianEntropy out;
    out.eps = eps_override ? *eps_override
                           : default_covariance_eps(gram.trace() / divisor, static_cast<int>(dim));

    // Covariance eigenvalues: top min(M, dim) Gram eigenvalues / (M-1),
    // the remaining dim - M (if any) are zero.
    const Eigen::Index reported = std::min(m, dim);
    out.eigenvalues.resize(reported);
    for (Eigen::Index i = 0; i < reported; ++i)
        out.eigenvalues[i] = std::max(eig.eigenvalues()[m - 1 - i], 0.0) / divisor;

    double h = 0.0;
    for (Eigen::Index i = 0; i < reported; ++i) h += std::log(out.eigenvalues[i] + out.eps);
    if (dim > m) h += static_cast<double>(dim - m) * std::log(out.eps);
    out.entropy = 0.5 * h;

    // (Sigma + eps I)^{-1} Y = Y V diag(1/(lambda_i + eps)) V^T over the
    // Gram eigenpairs; directions outside range(Y) do not contribute.
    Eigen::VectorXd inv(m);
    for (Eigen::Index i = 0; i < m; ++i)
        inv[i] = 1.0 / (std::max(eig.eigenvalues()[i], 0.0) / divisor + out.eps);
    const Eigen::MatrixXd b =
        eig.eigenvectors() * inv.asDiagonal() * eig.eigenvectors().transpose();
    out.gradient = (centered * b) / divisor;
    return out;
}

GaussianEntropy gaussian_model_entropy_dense(const Eigen::MatrixXd& data,
                                             std::optional<double> eps_override) {
    const Eigen::Index dim = data.rows();
    const Eigen::Index m = data.cols();
    if (m < 2) throw ValidationError("ensemble entropy requires at least 2 shapes");

    const Eigen::VectorXd mean = data.rowwise().mean();
    const Eigen::MatrixXd centered = data.colwise() - mean;
    const double divisor = static_cast<double>(m - 1);
    const Eigen::MatrixXd sigma = (centered * centered.transpose()) / divisor;

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(sigma);
    if (eig.info() != Eigen::Success) throw RuntimeError("covariance eigendecomposition failed");

    GaussianEntropy out;
    out.eps = eps_override ? *eps_override
                           : default_covariance_eps(sigma.trace(), static_cast<int>(dim));

    out.eigenvalues.resize(dim);
    for (Eigen::Index i = 0; i < dim; ++i)
        out.eigenvalues[i] = std::max(eig.eigenvalues()[dim - 1 - i], 0.0);

    double h = 0.0;
    for (Eigen::Index i = 0; i < dim; ++i) h += std::log(out.eigenvalues[i] + out.eps);
    out.entropy = 0.5 * h;

    Eigen::MatrixXd reg = sigma;
    reg.diagonal().array() += out.eps;
    out.gradient = reg.ldlt().solve(centered) / divisor;
    return out;
}

} // namespace ssmkit
