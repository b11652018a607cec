#include "ssmkit/surface_sampling.hpp"

#include <algorithm>
#include <cmath>

#include "ssmkit/error.hpp"
#include "ssmkit/rng.hpp"

namespace ssmkit {

PointList surface_points(const SurfaceMesh& mesh, std::size_t budget, std::uint64_t seed) {
    if (mesh.empty()) throw ValidationError("cannot sample points on an empty mesh");

    PointList points = mesh.vertices;
    if (budget <= points.size()) return points;

    std::vector<double> cumulative(mesh.faces.size());
    double total = 0.0;
    for (std::size_t f = 0; f < mesh.faces.size(); ++f) {
        total += mesh.face_area(f);
        cumulative[f] = total;
    }
    if (total <= 0.0) throw ValidationError("cannot sample points on a zero-area mesh");

    Rng rng(seed);
    const std::size_t extra = budget - points.size();
    points.reserve(budget);
    for (std::size_t i = 0; i < extra; ++i) {
        const double u = rng.uniform() * total;
        const auto it = std::lower_bound(cumulative.begin(), cumulative.end(), u);
        const std::size_t f = std::min<std::size_t>(
            static_cast<std::size_t>(it - cumulative.begin()), mesh.faces.size() - 1);
        const auto& t = mesh.faces[f];
        // sqrt trick: uniform over the triangle.
        const double r1 = std::sqrt(rng.uniform());
        const double r2 = rng.uniform();
        const Vec3 p = (1.0 - r1) * mesh.vertices[t[0]] + r1 * (1.0 - r2) * mesh.vertices[t[1]] +
                       r1 * r2 * mesh.vertices[t[2]];
        points.push_back(p);
    }
    return points;
}

} // namespace ssmkit
