#pragma once

#include <cstdint>

#include "ssmkit/mesh.hpp"

namespace ssmkit {

// Deterministic point sample of a surface: all mesh vertices plus, when
// budget exceeds the vertex count, area-weighted random interior points to
// reach at least `budget` points in total. budget 0 returns vertices only.
PointList surface_points(const SurfaceMesh& mesh, std::size_t budget, std::uint64_t seed);

} // namespace ssmkit
