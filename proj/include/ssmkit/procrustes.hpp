#pragma once

#include <Eigen/Core>
#include <vector>

#include "ssmkit/particle_system.hpp"

namespace ssmkit {

// Similarity transform y = scale * R * (x - source_center) + target_center.
struct RigidTransform {
    Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
    Eigen::Vector3d source_center = Eigen::Vector3d::Zero();
    Eigen::Vector3d target_center = Eigen::Vector3d::Zero();
    double scale = 1.0;

    Eigen::MatrixX3d apply(const Eigen::MatrixX3d& points) const;
    // Maps a gradient expressed in the target frame back to the source frame.
    Eigen::Vector3d pull_back(const Eigen::Vector3d& g) const;
};

// Least-squares rigid (optionally scaled) alignment of `source` onto
// `target`, rows corresponding. Kabsch with reflection guard.
RigidTransform kabsch(const Eigen::MatrixX3d& source, const Eigen::MatrixX3d& target,
                      bool with_scaling);

struct GpaResult {
    std::vector<RigidTransform> transforms; // one per shape
    Eigen::MatrixX3d mean;                  // consensus mean configuration
};

// Generalized Procrustes alignment of corresponding point sets.
GpaResult generalized_procrustes(const std::vector<Eigen::MatrixX3d>& shapes, bool with_scaling,
                                 int max_iterations = 10, double tol = 1e-10);

// Convenience: returns a copy of the system with every shape aligned to the
// GPA consensus.
ParticleSystem align_system(const ParticleSystem& system, bool with_scaling);

} // namespace ssmkit
