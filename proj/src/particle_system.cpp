#include "ssmkit/particle_system.hpp"

#include <filesystem>

#include "ssmkit/error.hpp"

namespace fs = std::filesystem;

namespace ssmkit {

Eigen::VectorXd flatten_particles(const Eigen::MatrixX3d& points) {
    Eigen::VectorXd v(points.rows() * 3);
    for (Eigen::Index k = 0; k < points.rows(); ++k) v.segment<3>(3 * k) = points.row(k);
    return v;
}

Eigen::MatrixX3d unflatten_particles(const Eigen::VectorXd& v) {
    if (v.size() % 3 != 0) throw ValidationError("shape vector length must be a multiple of 3");
    Eigen::MatrixX3d points(v.size() / 3, 3);
    for (Eigen::Index k = 0; k < points.rows(); ++k) points.row(k) = v.segment<3>(3 * k);
    return points;
}

Eigen::VectorXd ParticleSystem::shape_vector(int i) const { return flatten_particles(particles[i]); }

void ParticleSystem::set_shape_vector(int i, const Eigen::VectorXd& v) {
    particles[i] = unflatten_particles(v);
}

Eigen::MatrixXd ParticleSystem::data_matrix() const {
    const int m = n_shapes();
    const int n = n_particles();
    Eigen::MatrixXd data(3 * n, m);
    for (int i = 0; i < m; ++i) data.col(i) = shape_vector(i);
    return data;
}

void ParticleSystem::validate() const {
    if (shape_ids.size() != particles.size())
        throw ValidationError("particle system: shape_ids/particles length mismatch");
    const int n = n_particles();
    for (const auto& block : particles) {
        if (block.rows() != n)
            throw ValidationError("particle system: particle count differs across shapes");
        if (!block.allFinite())
            throw ValidationError("particle system: non-finite particle coordinates");
    }
}

void ParticleSystem::save(const std::string& directory) const {
    fs::create_directories(directory);
    for (int i = 0; i < n_shapes(); ++i) {
        const fs::path p = fs::path(directory) / (shape_ids[i] + ".particles");
        write_particles(matrix_to_points(particles[i]), p.string());
    }
}

ParticleSystem ParticleSystem::load(const std::string& directory,
                                    const std::vector<std::string>& shape_ids) {
    ParticleSystem system;
    system.shape_ids = shape_ids;
    for (const auto& id : shape_ids) {
        const fs::path p = fs::path(directory) / (id + ".particles");
        system.particles.push_back(points_to_matrix(read_particles(p.string())));
    }
    system.validate();
    return system;
}

} // namespace ssmkit
