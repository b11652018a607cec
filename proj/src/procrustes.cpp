#include "ssmkit/procrustes.hpp"

#include <Eigen/SVD>

#include "ssmkit/error.hpp"

namespace ssmkit {

Eigen::MatrixX3d RigidTransform::apply(const Eigen::MatrixX3d& points) const {
    Eigen::MatrixX3d out(points.rows(), 3);
    for (Eigen::Index k = 0; k < points.rows(); ++k) {
        const Eigen::Vector3d x = points.row(k).transpose() - source_center;
        out.row(k) = (scale * (rotation * x) + target_center).transpose();
    }
    return out;
}

Eigen::Vector3d RigidTransform::pull_back(const Eigen::Vector3d& g) const {
    return scale * (rotation.transpose() * g);
}

RigidTransform kabsch(const Eigen::MatrixX3d& source, const Eigen::MatrixX3d& target,
                      bool with_scaling) {
    if (source.rows() != target.rows() || source.rows() == 0)
        throw ValidationError("kabsch: point sets must be non-empty and corresponding");

    RigidTransform t;
    t.source_center = source.colwise().mean().transpose();
    t.target_center = target.colwise().mean().transpose();

    const Eigen::MatrixX3d sc = source.rowwise() - t.source_center.transpose();
    const Eigen::MatrixX3d tc = target.rowwise() - t.target_center.transpose();

    const Eigen::Matrix3d h = sc.transpose() * tc;
    Eigen::JacobiSVD<Eigen::Matrix3d> svd(h, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Eigen::Matrix3d d = Eigen::Matrix3d::Identity();
    if ((svd.matrixV() * svd.matrixU().transpose()).determinant() < 0.0) d(2, 2) = -1.0;
    t.rotation = svd.matrixV() * d * svd.matrixU().transpose();

    if (with_scaling) {
        const double denom = sc.squaredNorm();
        if (denom > 0.0) {
            // trace(D S) with S the singular values: optimal similarity scale.
            const double num = (svd.singularValues().asDiagonal() * d).trace();
            t.scale = num / denom;
            if (t.scale <= 0.0) t.scale = 1.0;
        }
    }
    return t;
}

GpaResult generalized_procrustes(const std::vector<Eigen::MatrixX3d>& shapes, bool with_scaling,
                                 int max_iterations, double tol) {
    if (shapes.empty()) throw ValidationError("generalized_procrustes: no shapes");
    const Eigen::Index n = shapes[0].rows();
    for (const auto& s : shapes) {
        if (s.rows() != n) throw ValidationError("generalized_procrustes: row count mismatch");
    }

    GpaResult result;
    result.transforms.resize(shapes.size());
    result.mean = shapes[0];

    for (int iter = 0; iter < max_iterations; ++iter) {
        Eigen::MatrixX3d new_mean = Eigen::MatrixX3d::Zero(n, 3);
        for (std::size_t i = 0; i < shapes.size(); ++i) {
            result.transforms[i] = kabsch(shapes[i], result.mean, with_scaling);
            new_mean += result.transforms[i].apply(shapes[i]);
        }
        new_mean /= static_cast<double>(shapes.size());
        const double change = (new_mean - result.mean).norm();
        result.mean = new_mean;
        if (change < tol * (1.0 + result.mean.norm())) break;
    }
    return result;
}

ParticleSystem align_system(const ParticleSystem& system, bool with_scaling) {
    const auto gpa = generalized_procrustes(system.particles, with_scaling);
    ParticleSystem aligned = system;
    for (int i = 0; i < system.n_shapes(); ++i) {
        aligned.particles[i] = gpa.transforms[i].apply(system.particles[i]);
    }
    return aligned;
}

} // namespace ssmkit
