#pragma once

#include "ssmkit/mesh.hpp"
#include "ssmkit/volume.hpp"

namespace ssmkit {

// Extracts the iso-level surface of a mask volume as a welded triangle mesh
// in physical coordinates. The volume is zero-padded by one voxel internally
// so foreground touching the grid border still produces a closed surface.
// An empty mask yields an empty mesh. Faces with area below 1e-12 mm^2 are
// dropped (and their vertices compacted away).
SurfaceMesh marching_cubes(const Volume& mask, double iso = 0.5);

} // namespace ssmkit
