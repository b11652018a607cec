#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace ssmkit {

enum class ElementType { uint8, int16, float32 };
enum class VolumeKind { mask, image };

// 3D voxel grid in physical (mm) coordinates. Voxel (x,y,z) is centered at
// origin + (x,y,z) * spacing; data is stored x-fastest, then y, then z.
struct Volume {
    std::array<int, 3> dims{0, 0, 0};
    std::array<double, 3> spacing{1.0, 1.0, 1.0};
    std::array<double, 3> origin{0.0, 0.0, 0.0};
    std::vector<float> data;
    ElementType elem = ElementType::uint8;
    VolumeKind kind = VolumeKind::image;

    std::size_t voxel_count() const {
        return static_cast<std::size_t>(dims[0]) * dims[1] * dims[2];
    }
    std::size_t index(int x, int y, int z) const {
        return static_cast<std::size_t>(z) * dims[1] * dims[0] +
               static_cast<std::size_t>(y) * dims[0] + x;
    }
    float at(int x, int y, int z) const { return data[index(x, y, z)]; }
    float& at(int x, int y, int z) { return data[index(x, y, z)]; }

    bool in_bounds(int x, int y, int z) const {
        return x >= 0 && y >= 0 && z >= 0 && x < dims[0] && y < dims[1] && z < dims[2];
    }

    // Foreground voxel count (mask volumes).
    std::size_t foreground_count() const;

    // Checks dims/spacing/data-length consistency; throws ValidationError.
    void validate() const;
};

// Reads a MetaImage (.mhd header + raw payload). Supported subset:
// MET_UCHAR / MET_SHORT / MET_FLOAT, little-endian, uncompressed, payload in
// a separate data file. Mask volumes are thresholded at > 0.5 on load.
Volume read_volume(const std::string& path, VolumeKind kind = VolumeKind::image);

inline Volume read_mask(const std::string& path) { return read_volume(path, VolumeKind::mask); }

// Writes the .mhd header at `path` and the payload next to it (same stem,
// .raw extension). read_volume(write_volume(v)) is bit-exact for the
// supported element types.
void write_volume(const Volume& v, const std::string& path);

} // namespace ssmkit
