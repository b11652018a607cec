#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

namespace ssmkit {

using Vec3 = Eigen::Vector3d;
using PointList = std::vector<Vec3>;

// ASCII particle file: one "x y z" line per particle.
PointList read_particles(const std::string& path);
void write_particles(const PointList& points, const std::string& path);

// N x 3 matrix view of a point list (row k = particle k).
Eigen::MatrixX3d points_to_matrix(const PointList& points);
PointList matrix_to_points(const Eigen::MatrixX3d& m);

} // namespace ssmkit
