#pragma once

#include <vector>

#include "ssmkit/mesh.hpp"

namespace ssmkit {

struct ClosestPointResult {
    Vec3 point = Vec3::Zero(); // closest point on the surface
    double distance = 0.0;     // |query - point|, mm
    int face = -1;
};

// Closest point on a single triangle (a,b,c) to p.
Vec3 closest_point_on_triangle(const Vec3& p, const Vec3& a, const Vec3& b, const Vec3& c);

// Serial reference: scan every triangle. Kept as the oracle for the BVH.
ClosestPointResult closest_point_brute(const SurfaceMesh& mesh, const Vec3& p);

// Axis-aligned bounding-box hierarchy over the faces of a SurfaceMesh.
// Immutable after construction; concurrent queries are safe. The mesh must
// outlive the index.
class SurfaceIndex {
public:
    explicit SurfaceIndex(const SurfaceMesh& mesh);

    const SurfaceMesh& mesh() const { return *mesh_; }

    ClosestPointResult closest_point(const Vec3& p) const;

    // Batch query, OpenMP-parallel over points. Results are independent of
    // the thread count.
    std::vector<ClosestPointResult> closest_points(const std::vector<Vec3>& pts) const;

private:
    struct Node {
        Vec3 lo, hi;
        int left = -1;   // internal: child node index
        int right = -1;
        int first = 0;   // leaf: range into face_order_
        int count = 0;
    };

    int build(int first, int count, std::vector<Vec3>& centroids);
    double box_distance_sq(const Node& n, const Vec3& p) const;

    const SurfaceMesh* mesh_;
    std::vector<Node> nodes_;
    std::vector<int> face_order_;
};

} // namespace ssmkit
