#include "ssmkit/particles.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ssmkit/error.hpp"

namespace ssmkit {

PointList read_particles(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw RuntimeError("cannot open particle file: " + path);

    PointList points;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        std::istringstream iss(line);
        double x, y, z;
        if (!(iss >> x >> y >> z)) {
            throw ValidationError("particle file " + path + " line " + std::to_string(lineno) +
                                  ": expected 3 coordinates");
        }
        std::string rest;
        if (iss >> rest) {
            throw ValidationError("particle file " + path + " line " + std::to_string(lineno) +
                                  ": trailing data '" + rest + "'");
        }
        if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z)) {
            throw ValidationError("particle file " + path + " line " + std::to_string(lineno) +
                                  ": non-finite coordinate");
        }
        points.emplace_back(x, y, z);
    }
    return points;
}

void write_particles(const PointList& points, const std::string& path) {
    for (const auto& p : points) {
        if (!p.allFinite()) throw ValidationError("refusing to write non-finite particle");
    }
    std::ofstream out(path);
    if (!out) throw RuntimeError("cannot write particle file: " + path);
    char buf[128];
    for (const auto& p : points) {
        std::snprintf(buf, sizeof(buf), "%.17g %.17g %.17g\n", p.x(), p.y(), p.z());
        out << buf;
    }
    if (!out) throw RuntimeError("write failure on particle file: " + path);
}

Eigen::MatrixX3d points_to_matrix(const PointList& points) {
    Eigen::MatrixX3d m(static_cast<Eigen::Index>(points.size()), 3);
    for (Eigen::Index i = 0; i < m.rows(); ++i) m.row(i) = points[static_cast<std::size_t>(i)];
    return m;
}

PointList matrix_to_points(const Eigen::MatrixX3d& m) {
    PointList points(static_cast<std::size_t>(m.rows()));
    for (Eigen::Index i = 0; i < m.rows(); ++i) points[static_cast<std::size_t>(i)] = m.row(i);
    return points;
}

} // namespace ssmkit
