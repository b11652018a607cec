#pragma once

#include <Eigen/Core>
#include <array>
#include <string>
#include <vector>

#include "ssmkit/particles.hpp"

namespace ssmkit {

// Triangle mesh in physical (mm) coordinates.
struct SurfaceMesh {
    std::vector<Vec3> vertices;
    std::vector<std::array<int, 3>> faces;

    bool empty() const { return faces.empty(); }

    Vec3 face_normal(std::size_t f) const;
    double face_area(std::size_t f) const;
    double total_area() const;

    // Area-weighted centroid of the surface.
    Vec3 surface_centroid() const;

    // Centroid of the enclosed solid (signed tetrahedra against the origin);
    // falls back to the surface centroid for open or near-degenerate meshes.
    Vec3 enclosed_centroid() const;

    // Axis-aligned bounding box diagonal length; 0 for empty meshes.
    double bbox_diagonal() const;

    // Index ranges and finiteness; throws ValidationError.
    void validate() const;
};

// ASCII PLY with xyz vertices and triangular faces only.
SurfaceMesh read_mesh(const std::string& path);
void write_mesh(const SurfaceMesh& mesh, const std::string& path);

} // namespace ssmkit
