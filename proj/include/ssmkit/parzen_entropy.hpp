#pragma once

#include <Eigen/Core>

namespace ssmkit {

// Parzen (kernel density) estimate of the differential entropy of one
// shape's particle set, with an isotropic Gaussian kernel and a per-particle
// adaptive bandwidth:
//   H = -1/N * sum_j log p_j,
//   p_j = 1/(N-1) * sum_{l != j} (2 pi s_j^2)^{-3/2} exp(-|x_j-x_l|^2/(2 s_j^2)).
// Bandwidths are treated as constants by the gradient.
struct ParzenEval {
    double entropy = 0.0;
    Eigen::MatrixX3d gradient; // N x 3, dH/dx
};

// Solves each particle's bandwidth by damped fixed-point iteration so its
// Gaussian-weighted neighbor count sum_{l != j} exp(-d^2/(2 s^2)) hits
// min(target_neighbors, 0.6*(N-1)). Deterministic; requires N >= 2.
Eigen::VectorXd parzen_bandwidths(const Eigen::MatrixX3d& points, double target_neighbors = 6.0);

// OpenMP kernel (two passes: densities, then per-particle gradients).
ParzenEval parzen_entropy(const Eigen::MatrixX3d& points, const Eigen::VectorXd& bandwidths);

// Naive serial reference kept for testing.
ParzenEval parzen_entropy_serial(const Eigen::MatrixX3d& points, const Eigen::VectorXd& bandwidths);

} // namespace ssmkit
