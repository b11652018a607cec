#include "ssmkit/surface_index.hpp"

#include <algorithm>
#include <limits>

#include "ssmkit/error.hpp"
#include "ssmkit/parallel.hpp"

namespace ssmkit {

// Ericson's barycentric region walk.
Vec3 closest_point_on_triangle(const Vec3& p, const Vec3& a, const Vec3& b, const Vec3& c) {
    const Vec3 ab = b - a, ac = c - a, ap = p - a;
    const double d1 = ab.dot(ap), d2 = ac.dot(ap);
    if (d1 <= 0.0 && d2 <= 0.0) return a;

    const Vec3 bp = p - b;
    const double d3 = ab.dot(bp), d4 = ac.dot(bp);
    if (d3 >= 0.0 && d4 <= d3) return b;

    const double vc = d1 * d4 - d3 * d2;
    if (vc <= 0.0 && d1 >= 0.0 && d3 <= 0.0) {
        const double v = d1 / (d1 - d3);
        return a + v * ab;
    }

    const Vec3 cp = p - c;
    const double d5 = ab.dot(cp), d6 = ac.dot(cp);
    if (d6 >= 0.0 && d5 <= d6) return c;

    const double vb = d5 * d2 - d1 * d6;
    if (vb <= 0.0 && d2 >= 0.0 && d6 <= 0.0) {
        const double w = d2 / (d2 - d6);
        return a + w * ac;
    }

    const double va = d3 * d6 - d5 * d4;
    if (va <= 0.0 && (d4 - d3) >= 0.0 && (d5 - d6) >= 0.0) {
        const double w = (d4 - d3) / ((d4 - d3) + (d5 - d6));
        return b + w * (c - b);
    }

    const double denom = 1.0 / (va + vb + vc);
    const double v = vb * denom;
    const double w = vc * denom;
    return a + v * ab + w * ac;
}

ClosestPointResult closest_point_brute(const SurfaceMesh& mesh, const Vec3& p) {
    if (mesh.empty()) throw ValidationError("closest point query on empty mesh");
    ClosestPointResult best;
    double best_sq = std::numeric_limits<double>::infinity();
    for (std::size_t f = 0; f < mesh.faces.size(); ++f) {
        const auto& t = mesh.faces[f];
        const Vec3 q = closest_point_on_triangle(p, mesh.vertices[t[0]], mesh.vertices[t[1]],
                                                 mesh.vertices[t[2]]);
        const double d_sq = (p - q).squaredNorm();
        if (d_sq < best_sq) {
            best_sq = d_sq;
            best.point = q;
            best.face = static_cast<int>(f);
        }
    }
    best.distance = std::sqrt(best_sq);
    return best;
}

SurfaceIndex::SurfaceIndex(const SurfaceMesh& mesh) : mesh_(&mesh) {
    if (mesh.empty()) throw ValidationError("cannot build surface index over an empty mesh");
    const int n = static_cast<int>(mesh.faces.size());
    face_order_.resize(n);
    for (int i = 0; i < n; ++i) face_order_[i] = i;
    std::vector<Vec3> centroids(n);
    for (int i = 0; i < n; ++i) {
        const auto& t = mesh.faces[i];
        centroids[i] = (mesh.vertices[t[0]] + mesh.vertices[t[1]] + mesh.vertices[t[2]]) / 3.0;
    }
    nodes_.reserve(static_cast<std::size_t>(2 * n));
    build(0, n, centroids);
}

int SurfaceIndex::build(int first, int count, std::vector<Vec3>& centroids) {
    const int node_index = static_cast<int>(nodes_.size());
    nodes_.emplace_back();

    Vec3 lo = Vec3::Constant(std::numeric_limits<double>::infinity());
    Vec3 hi = -lo;
    Vec3 clo = lo, chi = hi;
    for (int i = first; i < first + count; ++i) {
        const auto& t = mesh_->faces[face_order_[i]];
        for (int k = 0; k < 3; ++k) {
            lo = lo.cwiseMin(mesh_->vertices[t[k]]);
            hi = hi.cwiseMax(mesh_->vertices[t[k]]);
        }
        clo = clo.cwiseMin(centroids[face_order_[i]]);
        chi = chi.cwiseMax(centroids[face_order_[i]]);
    }
    nodes_[node_index].lo = lo;
    nodes_[node_index].hi = hi;

    constexpr int kLeafSize = 4;
    if (count <= kLeafSize) {
        nodes_[node_index].first = first;
        nodes_[node_index].count = count;
        return node_index;
    }

    int axis = 0;
    const Vec3 extent = chi - clo;
    if (extent.y() > extent.x()) axis = 1;
    if (extent.z() > extent[axis]) axis = 2;

    const int mid = first + count / 2;
    std::nth_element(face_order_.begin() + first, face_order_.begin() + mid,
                     face_order_.begin() + first + count, [&](int a, int b) {
                         if (centroids[a][axis] != centroids[b][axis])
                             return centroids[a][axis] < centroids[b][axis];
                         return a < b;
                     });

    const int left = build(first, mid - first, centroids);
    const int right = build(mid, first + count - mid, centroids);
    nodes_[node_index].left = left;
    nodes_[node_index].right = right;
    return node_index;
}

double SurfaceIndex::box_distance_sq(const Node& n, const Vec3& p) const {
    double d = 0.0;
    for (int k = 0; k < 3; ++k) {
        const double v = std::max({n.lo[k] - p[k], 0.0, p[k] - n.hi[k]});
        d += v * v;
    }
    return d;
}

ClosestPointResult SurfaceIndex::closest_point(const Vec3& p) const {
    ClosestPointResult best;
    double best_sq = std::numeric_limits<double>::infinity();

    int stack[128];
    int top = 0;
    stack[top++] = 0;
    while (top > 0) {
        const Node& node = nodes_[stack[--top]];
        if (box_distance_sq(node, p) >= best_sq) continue;
        if (node.count > 0) {
            for (int i = node.first; i < node.first + node.count; ++i) {
                const int f = face_order_[i];
                const auto& t = mesh_->faces[f];
                const Vec3 q = closest_point_on_triangle(p, mesh_->vertices[t[0]],
                                                         mesh_->vertices[t[1]], mesh_->vertices[t[2]]);
                const double d_sq = (p - q).squaredNorm();
                if (d_sq < best_sq) {
                    best_sq = d_sq;
                    best.point = q;
                    best.face = f;
                }
            }
            continue;
        }
        // Visit the nearer child first so the bound tightens early.
        const double dl = box_distance_sq(nodes_[node.left], p);
        const double dr = box_distance_sq(nodes_[node.right], p);
        if (dl < dr) {
            if (dr < best_sq) stack[top++] = node.right;
            if (dl < best_sq) stack[top++] = node.left;
        } else {
            if (dl < best_sq) stack[top++] = node.left;
            if (dr < best_sq) stack[top++] = node.right;
        }
    }
    best.distance = std::sqrt(best_sq);
    return best;
}

std::vector<ClosestPointResult> SurfaceIndex::closest_points(const std::vector<Vec3>& pts) const {
    std::vector<ClosestPointResult> out(pts.size());
    parallel_for(static_cast<std::int64_t>(pts.size()),
                 [&](std::int64_t i) { out[i] = closest_point(pts[i]); });
    return out;
}

} // namespace ssmkit
