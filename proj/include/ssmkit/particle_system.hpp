#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "ssmkit/particles.hpp"

namespace ssmkit {

// M shapes x N corresponding particles. Particle k of shape i corresponds to
// particle k of shape j; shape order is cohort order.
struct ParticleSystem {
    std::vector<std::string> shape_ids;
    std::vector<Eigen::MatrixX3d> particles; // one N x 3 block per shape

    int n_shapes() const { return static_cast<int>(particles.size()); }
    int n_particles() const { return particles.empty() ? 0 : static_cast<int>(particles[0].rows()); }

    // 3N shape vector of shape i, flattened x1 y1 z1 x2 ...
    Eigen::VectorXd shape_vector(int i) const;
    void set_shape_vector(int i, const Eigen::VectorXd& v);

    // 3N x M matrix with one shape vector per column.
    Eigen::MatrixXd data_matrix() const;

    // Equal particle counts, finite coordinates; throws ValidationError.
    void validate() const;

    // Writes one <shape_id>.particles file per shape into `directory`.
    void save(const std::string& directory) const;

    static ParticleSystem load(const std::string& directory,
                               const std::vector<std::string>& shape_ids);
};

Eigen::VectorXd flatten_particles(const Eigen::MatrixX3d& points);
Eigen::MatrixX3d unflatten_particles(const Eigen::VectorXd& v);

} // namespace ssmkit
