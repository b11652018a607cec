#include "ssmkit/manifest.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>

#include <json.hpp>

#include "ssmkit/error.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace ssmkit {

std::vector<ManifestEntry> CohortManifest::select(Split split, const Source& source) const {
    std::vector<ManifestEntry> out;
    for (const auto& e : entries) {
        if (e.split == split && e.source == source) out.push_back(e);
    }
    return out;
}

std::vector<std::string> CohortManifest::method_labels() const {
    std::set<std::string> labels;
    for (const auto& e : entries) {
        if (!e.source.is_gt()) labels.insert(e.source.method);
    }
    return {labels.begin(), labels.end()};
}

bool CohortManifest::has(Split split, const Source& source) const {
    return std::any_of(entries.begin(), entries.end(), [&](const ManifestEntry& e) {
        return e.split == split && e.source == source;
    });
}

CohortManifest load_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw RuntimeError("cannot open manifest: " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ValidationError("manifest parse error in " + path + ": " + e.what());
    }
    if (!doc.is_object() || !doc.contains("shapes") || !doc["shapes"].is_array())
        throw ValidationError("manifest must be an object with a 'shapes' array: " + path);

    const fs::path base = fs::path(path).parent_path();
    CohortManifest manifest;
    std::set<std::tuple<int, std::string, std::string>> seen;
    std::map<std::string, Split> id_split;

    for (const auto& item : doc["shapes"]) {
        ManifestEntry e;
        if (!item.contains("id") || !item.contains("volume") || !item.contains("split") ||
            !item.contains("source"))
            throw ValidationError("manifest entry missing id/volume/split/source: " + path);
        e.shape_id = item["id"].get<std::string>();

        const std::string split = item["split"].get<std::string>();
        if (split == "train") e.split = Split::train;
        else if (split == "test") e.split = Split::test;
        else throw ValidationError("manifest split must be 'train' or 'test', got '" + split + "'");

        const auto& src = item["source"];
        if (src.is_string()) {
            if (src.get<std::string>() != "gt")
                throw ValidationError("string source must be 'gt'; methods use {\"method\":name}");
        } else if (src.is_object() && src.contains("method")) {
            e.source.method = src["method"].get<std::string>();
            if (e.source.method.empty() || e.source.method == "gt")
                throw ValidationError("invalid method label in manifest source");
        } else {
            throw ValidationError("manifest source must be 'gt' or {\"method\":name}");
        }

        fs::path vp(item["volume"].get<std::string>());
        if (vp.is_relative()) vp = base / vp;
        e.volume_path = vp.string();
        if (!fs::exists(e.volume_path))
            throw ValidationError("manifest references missing file: " + e.volume_path);

        const auto key = std::make_tuple(static_cast<int>(e.split), e.source.label(), e.shape_id);
        if (!seen.insert(key).second)
            throw ValidationError("duplicate manifest entry: id '" + e.shape_id + "' split '" +
                                  split + "' source '" + e.source.label() + "'");
        auto [it, inserted] = id_split.emplace(e.shape_id, e.split);
        if (!inserted && it->second != e.split)
            throw ValidationError("shape id '" + e.shape_id + "' appears in both train and test");

        manifest.entries.push_back(std::move(e));
    }
    return manifest;
}

void save_manifest(const CohortManifest& manifest, const std::string& path) {
    json shapes = json::array();
    for (const auto& e : manifest.entries) {
        json item;
        item["id"] = e.shape_id;
        item["volume"] = e.volume_path;
        item["split"] = (e.split == Split::train) ? "train" : "test";
        if (e.source.is_gt()) item["source"] = "gt";
        else item["source"] = json{{"method", e.source.method}};
        shapes.push_back(std::move(item));
    }
    json doc;
    doc["shapes"] = std::move(shapes);
    std::ofstream out(path);
    if (!out) throw RuntimeError("cannot write manifest: " + path);
    out << doc.dump(2) << '\n';
}

} // namespace ssmkit
