#include "ssmkit/mesh.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "ssmkit/error.hpp"

namespace ssmkit {

Vec3 SurfaceMesh::face_normal(std::size_t f) const {
    const auto& t = faces[f];
    const Vec3 e1 = vertices[t[1]] - vertices[t[0]];
    const Vec3 e2 = vertices[t[2]] - vertices[t[0]];
    Vec3 n = e1.cross(e2);
    const double len = n.norm();
    if (len > 0.0) n /= len;
    return n;
}

double SurfaceMesh::face_area(std::size_t f) const {
    const auto& t = faces[f];
    const Vec3 e1 = vertices[t[1]] - vertices[t[0]];
    const Vec3 e2 = vertices[t[2]] - vertices[t[0]];
    return 0.5 * e1.cross(e2).norm();
}

double SurfaceMesh::total_area() const {
    double a = 0.0;
    for (std::size_t f = 0; f < faces.size(); ++f) a += face_area(f);
    return a;
}

Vec3 SurfaceMesh::surface_centroid() const {
    Vec3 c = Vec3::Zero();
    double total = 0.0;
    for (std::size_t f = 0; f < faces.size(); ++f) {
        const auto& t = faces[f];
        const double a = face_area(f);
        c += a * (vertices[t[0]] + vertices[t[1]] + vertices[t[2]]) / 3.0;
        total += a;
    }
    if (total > 0.0) c /= total;
    return c;
}

double SurfaceMesh::bbox_diagonal() const {
    if (vertices.empty()) return 0.0;
    Vec3 lo = vertices.front(), hi = vertices.front();
    for (const auto& v : vertices) {
        lo = lo.cwiseMin(v);
        hi = hi.cwiseMax(v);
    }
    return (hi - lo).norm();
}

void SurfaceMesh::validate() const {
    const int nv = static_cast<int>(vertices.size());
    for (const auto& v : vertices) {
        if (!v.allFinite()) throw ValidationError("mesh has non-finite vertex");
    }
    for (const auto& f : faces) {
        for (int idx : f) {
            if (idx < 0 || idx >= nv) throw ValidationError("mesh face index out of range");
        }
    }
}

SurfaceMesh read_mesh(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw RuntimeError("cannot open mesh file: " + path);

    std::string line;
    if (!std::getline(in, line) || line.substr(0, 3) != "ply")
        throw ValidationError("not a PLY file: " + path);

    std::size_t n_vertices = 0, n_faces = 0;
    int vertex_props = 0;
    bool in_vertex_element = false;
    bool ascii = false;
    while (std::getline(in, line)) {
        std::istringstream iss(line);
        std::string tok;
        iss >> tok;
        if (tok == "comment") continue;
        if (tok == "format") {
            std::string fmt;
            iss >> fmt;
            ascii = (fmt == "ascii");
        } else if (tok == "element") {
            std::string name;
            std::size_t count;
            iss >> name >> count;
            if (name == "vertex") {
                n_vertices = count;
                in_vertex_element = true;
            } else if (name == "face") {
                n_faces = count;
                in_vertex_element = false;
            } else {
                throw ValidationError("unsupported PLY element: " + name);
            }
        } else if (tok == "property") {
            if (in_vertex_element) ++vertex_props;
        } else if (tok == "end_header") {
            break;
        }
    }
    if (!ascii) throw ValidationError("only ASCII PLY is supported: " + path);
    if (vertex_props != 3)
        throw ValidationError("PLY vertex element must have exactly x y z properties: " + path);

    SurfaceMesh mesh;
    mesh.vertices.reserve(n_vertices);
    for (std::size_t i = 0; i < n_vertices; ++i) {
        double x, y, z;
        if (!(in >> x >> y >> z)) throw ValidationError("PLY vertex parse failure: " + path);
        mesh.vertices.emplace_back(x, y, z);
    }
    mesh.faces.reserve(n_faces);
    for (std::size_t i = 0; i < n_faces; ++i) {
        int count;
        if (!(in >> count)) throw ValidationError("PLY face parse failure: " + path);
        if (count != 3) throw ValidationError("non-triangular PLY face (count " +
                                              std::to_string(count) + "): " + path);
        std::array<int, 3> f{};
        if (!(in >> f[0] >> f[1] >> f[2])) throw ValidationError("PLY face parse failure: " + path);
        mesh.faces.push_back(f);
    }
    mesh.validate();
    return mesh;
}

void write_mesh(const SurfaceMesh& mesh, const std::string& path) {
    mesh.validate();
    std::ofstream out(path);
    if (!out) throw RuntimeError("cannot write mesh file: " + path);
    out << "ply\nformat ascii 1.0\n"
        << "element vertex " << mesh.vertices.size() << '\n'
        << "property double x\nproperty double y\nproperty double z\n"
        << "element face " << mesh.faces.size() << '\n'
        << "property list uchar int vertex_indices\n"
        << "end_header\n";
    char buf[128];
    for (const auto& v : mesh.vertices) {
        std::snprintf(buf, sizeof(buf), "%.17g %.17g %.17g\n", v.x(), v.y(), v.z());
        out << buf;
    }
    for (const auto& f : mesh.faces) out << "3 " << f[0] << ' ' << f[1] << ' ' << f[2] << '\n';
    if (!out) throw RuntimeError("write failure on mesh file: " + path);
}

} // namespace ssmkit
