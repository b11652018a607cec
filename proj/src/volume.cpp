#include "ssmkit/volume.hpp"

#include <algorithm>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ssmkit/error.hpp"

namespace fs = std::filesystem;

namespace ssmkit {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::size_t element_size(ElementType t) {
    switch (t) {
        case ElementType::uint8: return 1;
        case ElementType::int16: return 2;
        case ElementType::float32: return 4;
    }
    return 0;
}

const char* element_name(ElementType t) {
    switch (t) {
        case ElementType::uint8: return "MET_UCHAR";
        case ElementType::int16: return "MET_SHORT";
        case ElementType::float32: return "MET_FLOAT";
    }
    return "";
}

template <typename T>
void parse_triple(const std::string& value, const std::string& key, std::array<T, 3>& out) {
    std::istringstream iss(value);
    for (auto& v : out) {
        if (!(iss >> v)) throw ValidationError("malformed MetaImage header: bad " + key + " '" + value + "'");
    }
    T extra;
    if (iss >> extra) throw ValidationError("malformed MetaImage header: " + key + " has more than 3 components");
}

} // namespace

std::size_t Volume::foreground_count() const {
    std::size_t n = 0;
    for (float v : data) n += (v != 0.0f);
    return n;
}

void Volume::validate() const {
    if (dims[0] <= 0 || dims[1] <= 0 || dims[2] <= 0)
        throw ValidationError("volume dims must be positive");
    if (spacing[0] <= 0 || spacing[1] <= 0 || spacing[2] <= 0)
        throw ValidationError("volume spacing must be positive");
    if (data.size() != voxel_count())
        throw ValidationError("volume data length does not match dims");
}

Volume read_volume(const std::string& path, VolumeKind kind) {
    std::ifstream header(path);
    if (!header) throw RuntimeError("cannot open volume header: " + path);

    Volume v;
    v.kind = kind;
    bool have_dims = false, have_type = false;
    std::string data_file;
    std::string line;
    while (std::getline(header, line)) {
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ValidationError("malformed MetaImage header line: '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        if (key == "ObjectType") {
            if (value != "Image") throw ValidationError("unsupported ObjectType: " + value);
        } else if (key == "NDims") {
            if (value != "3") throw ValidationError("unsupported NDims: " + value);
        } else if (key == "DimSize") {
            parse_triple(value, key, v.dims);
            have_dims = true;
        } else if (key == "ElementSpacing") {
            parse_triple(value, key, v.spacing);
        } else if (key == "Offset" || key == "Position" || key == "Origin") {
            parse_triple(value, key, v.origin);
        } else if (key == "ElementType") {
            if (value == "MET_UCHAR") v.elem = ElementType::uint8;
            else if (value == "MET_SHORT") v.elem = ElementType::int16;
            else if (value == "MET_FLOAT") v.elem = ElementType::float32;
            else throw ValidationError("unsupported ElementType: " + value);
            have_type = true;
        } else if (key == "ElementByteOrderMSB" || key == "BinaryDataByteOrderMSB") {
            if (value == "True") throw ValidationError("big-endian payloads are not supported");
        } else if (key == "CompressedData") {
            if (value == "True") throw ValidationError("compressed payloads are not supported");
        } else if (key == "ElementDataFile") {
            if (value == "LOCAL") throw ValidationError("inline (LOCAL) payloads are not supported");
            data_file = value;
        }
        // Other keys (TransformMatrix, CenterOfRotation, ...) are ignored.
    }
    if (!have_dims) throw ValidationError("malformed MetaImage header: missing DimSize");
    if (!have_type) throw ValidationError("malformed MetaImage header: missing ElementType");
    if (data_file.empty()) throw ValidationError("malformed MetaImage header: missing ElementDataFile");
    if (v.dims[0] <= 0 || v.dims[1] <= 0 || v.dims[2] <= 0)
        throw ValidationError("malformed MetaImage header: non-positive DimSize");
    if (v.spacing[0] <= 0 || v.spacing[1] <= 0 || v.spacing[2] <= 0)
        throw ValidationError("malformed MetaImage header: non-positive ElementSpacing");

    fs::path raw_path(data_file);
    if (raw_path.is_relative()) raw_path = fs::path(path).parent_path() / raw_path;

    std::ifstream raw(raw_path, std::ios::binary);
    if (!raw) throw RuntimeError("cannot open volume payload: " + raw_path.string());
    raw.seekg(0, std::ios::end);
    const std::size_t payload = static_cast<std::size_t>(raw.tellg());
    raw.seekg(0, std::ios::beg);

    const std::size_t n = v.voxel_count();
    const std::size_t expected = n * element_size(v.elem);
    if (payload != expected) {
        std::ostringstream oss;
        oss << "volume payload size mismatch: header declares " << expected << " bytes, file has "
            << payload << " (" << raw_path.string() << ")";
        throw ValidationError(oss.str());
    }

    std::vector<char> buf(payload);
    raw.read(buf.data(), static_cast<std::streamsize>(payload));
    if (!raw) throw RuntimeError("short read on volume payload: " + raw_path.string());

    v.data.resize(n);
    switch (v.elem) {
        case ElementType::uint8: {
            const auto* p = reinterpret_cast<const std::uint8_t*>(buf.data());
            for (std::size_t i = 0; i < n; ++i) v.data[i] = static_cast<float>(p[i]);
            break;
        }
        case ElementType::int16: {
            for (std::size_t i = 0; i < n; ++i) {
                std::int16_t x;
                std::memcpy(&x, buf.data() + 2 * i, 2);
                v.data[i] = static_cast<float>(x);
            }
            break;
        }
        case ElementType::float32: {
            for (std::size_t i = 0; i < n; ++i)
                std::memcpy(&v.data[i], buf.data() + 4 * i, 4);
            break;
        }
    }

    if (kind == VolumeKind::mask) {
        for (auto& x : v.data) x = (x > 0.5f) ? 1.0f : 0.0f;
    }
    return v;
}

void write_volume(const Volume& v, const std::string& path) {
    v.validate();

    fs::path header_path(path);
    fs::path raw_path = header_path;
    raw_path.replace_extension(".raw");

    std::ofstream header(header_path);
    if (!header) throw RuntimeError("cannot write volume header: " + path);
    header << "ObjectType = Image\n"
           << "NDims = 3\n"
           << "BinaryData = True\n"
           << "BinaryDataByteOrderMSB = False\n"
           << "CompressedData = False\n"
           << "DimSize = " << v.dims[0] << ' ' << v.dims[1] << ' ' << v.dims[2] << '\n';
    char buf[96];
    std::snprintf(buf, sizeof(buf), "ElementSpacing = %.17g %.17g %.17g\n", v.spacing[0],
                  v.spacing[1], v.spacing[2]);
    header << buf;
    std::snprintf(buf, sizeof(buf), "Offset = %.17g %.17g %.17g\n", v.origin[0], v.origin[1],
                  v.origin[2]);
    header << buf;
    header << "ElementType = " << element_name(v.elem) << '\n'
           << "ElementDataFile = " << raw_path.filename().string() << '\n';
    if (!header) throw RuntimeError("write failure on volume header: " + path);
    header.close();

    std::ofstream raw(raw_path, std::ios::binary);
    if (!raw) throw RuntimeError("cannot write volume payload: " + raw_path.string());
    const std::size_t n = v.voxel_count();
    std::vector<char> out(n * element_size(v.elem));
    switch (v.elem) {
        case ElementType::uint8: {
            auto* p = reinterpret_cast<std::uint8_t*>(out.data());
            for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<std::uint8_t>(v.data[i]);
            break;
        }
        case ElementType::int16: {
            for (std::size_t i = 0; i < n; ++i) {
                const auto x = static_cast<std::int16_t>(v.data[i]);
                std::memcpy(out.data() + 2 * i, &x, 2);
            }
            break;
        }
        case ElementType::float32: {
            for (std::size_t i = 0; i < n; ++i)
                std::memcpy(out.data() + 4 * i, &v.data[i], 4);
            break;
        }
    }
    raw.write(out.data(), static_cast<std::streamsize>(out.size()));
    if (!raw) throw RuntimeError("write failure on volume payload: " + raw_path.string());
}

} // namespace ssmkit
