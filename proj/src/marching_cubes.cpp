#include "ssmkit/marching_cubes.hpp"

#include <cstdint>
#include <unordered_map>

#include "ssmkit/error.hpp"
#include "ssmkit/mc_tables.hpp"

namespace ssmkit {

namespace {

// Cube corner offsets, Bourke numbering: 0-3 bottom loop, 4-7 top loop.
constexpr int kCorner[8][3] = {
    {0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0},
    {0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1},
};

// Edge -> (corner, corner).
constexpr int kEdge[12][2] = {
    {0, 1}, {1, 2}, {2, 3}, {3, 0},
    {4, 5}, {5, 6}, {6, 7}, {7, 4},
    {0, 4}, {1, 5}, {2, 6}, {3, 7},
};

} // namespace

SurfaceMesh marching_cubes(const Volume& mask, double iso) {
    mask.validate();
    const int nx = mask.dims[0], ny = mask.dims[1], nz = mask.dims[2];

    // Padded sample at lattice index in [-1, dims]; outside voxels read 0.
    auto sample = [&](int x, int y, int z) -> double {
        if (x < 0 || y < 0 || z < 0 || x >= nx || y >= ny || z >= nz) return 0.0;
        return mask.at(x, y, z);
    };
    auto lattice_point = [&](int x, int y, int z) -> Vec3 {
        return Vec3(mask.origin[0] + x * mask.spacing[0], mask.origin[1] + y * mask.spacing[1],
                    mask.origin[2] + z * mask.spacing[2]);
    };

    // Welded vertex per crossed lattice edge, keyed by (min corner, axis).
    const std::uint64_t px = static_cast<std::uint64_t>(nx) + 2;
    const std::uint64_t py = static_cast<std::uint64_t>(ny) + 2;
    auto edge_key = [&](int x, int y, int z, int axis) -> std::uint64_t {
        const std::uint64_t lin =
            (static_cast<std::uint64_t>(z + 1) * py + static_cast<std::uint64_t>(y + 1)) * px +
            static_cast<std::uint64_t>(x + 1);
        return lin * 3 + static_cast<std::uint64_t>(axis);
    };

    SurfaceMesh mesh;
    std::unordered_map<std::uint64_t, int> edge_vertex;
    double corner_val[8];
    int vertex_of_edge[12];

    for (int cz = -1; cz < nz; ++cz) {
        for (int cy = -1; cy < ny; ++cy) {
            for (int cx = -1; cx < nx; ++cx) {
                int cube_index = 0;
                for (int c = 0; c < 8; ++c) {
                    corner_val[c] = sample(cx + kCorner[c][0], cy + kCorner[c][1], cz + kCorner[c][2]);
                    if (corner_val[c] < iso) cube_index |= 1 << c;
                }
                const std::uint16_t edges = detail::kMcEdgeTable[cube_index];
                if (edges == 0) continue;

                for (int e = 0; e < 12; ++e) {
                    if (!(edges & (1u << e))) continue;
                    const int a = kEdge[e][0], b = kEdge[e][1];
                    const int ax = cx + kCorner[a][0], ay = cy + kCorner[a][1], az = cz + kCorner[a][2];
                    const int bx = cx + kCorner[b][0], by = cy + kCorner[b][1], bz = cz + kCorner[b][2];
                    // Canonical key: lattice edge identified by its lower corner + axis.
                    int axis, mx = ax, my = ay, mz = az;
                    if (ax != bx) { axis = 0; mx = std::min(ax, bx); }
                    else if (ay != by) { axis = 1; my = std::min(ay, by); }
                    else { axis = 2; mz = std::min(az, bz); }

                    const std::uint64_t key = edge_key(mx, my, mz, axis);
                    auto it = edge_vertex.find(key);
                    if (it == edge_vertex.end()) {
                        const double va = corner_val[a], vb = corner_val[b];
                        const double t = (iso - va) / (vb - va);
                        const Vec3 pa = lattice_point(ax, ay, az);
                        const Vec3 pb = lattice_point(bx, by, bz);
                        const int idx = static_cast<int>(mesh.vertices.size());
                        mesh.vertices.push_back(pa + t * (pb - pa));
                        it = edge_vertex.emplace(key, idx).first;
                    }
                    vertex_of_edge[e] = it->second;
                }

                const std::int8_t* tri = detail::kMcTriTable[cube_index];
                for (int t = 0; tri[t] != -1; t += 3) {
                    const int i0 = vertex_of_edge[tri[t]];
                    const int i1 = vertex_of_edge[tri[t + 1]];
                    const int i2 = vertex_of_edge[tri[t + 2]];
                    if (i0 == i1 || i1 == i2 || i0 == i2) continue;
                    mesh.faces.push_back({i0, i1, i2});
                }
            }
        }
    }

    // Cleanup: drop near-degenerate faces, compact vertices.
    std::vector<std::array<int, 3>> kept;
    kept.reserve(mesh.faces.size());
    for (std::size_t f = 0; f < mesh.faces.size(); ++f) {
        if (mesh.face_area(f) > 1e-12) kept.push_back(mesh.faces[f]);
    }
    if (kept.size() != mesh.faces.size()) {
        mesh.faces = std::move(kept);
        std::vector<int> remap(mesh.vertices.size(), -1);
        std::vector<Vec3> vertices;
        for (auto& f : mesh.faces) {
            for (int& idx : f) {
                if (remap[idx] < 0) {
                    remap[idx] = static_cast<int>(vertices.size());
                    vertices.push_back(mesh.vertices[idx]);
                }
                idx = remap[idx];
            }
        }
        mesh.vertices = std::move(vertices);
    }
    return mesh;
}

} // namespace ssmkit
