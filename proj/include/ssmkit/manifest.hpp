#pragma once

#include <optional>
#include <string>
#include <vector>

namespace ssmkit {

enum class Split { train, test };

// "gt" for manual segmentations, otherwise a semi-supervised method label.
struct Source {
    std::string method; // empty => ground truth

    bool is_gt() const { return method.empty(); }
    std::string label() const { return is_gt() ? "gt" : method; }

    friend bool operator==(const Source&, const Source&) = default;
};

struct ManifestEntry {
    std::string shape_id;
    std::string volume_path; // resolved relative to the manifest file
    Split split = Split::train;
    Source source;
};

// Cohort description. Entry order is preserved exactly as written; the
// correspondence bookkeeping downstream depends on it.
struct CohortManifest {
    std::vector<ManifestEntry> entries;

    std::vector<ManifestEntry> select(Split split, const Source& source) const;
    std::vector<std::string> method_labels() const; // sorted, unique, no "gt"
    bool has(Split split, const Source& source) const;
};

// Loads and validates the JSON manifest:
//   {"shapes":[{"id":..,"volume":..,"split":"train"|"test",
//               "source":"gt"|{"method":..}}]}
// Unknown fields are ignored. Errors: duplicate (split,source,id), an id
// appearing in both splits, missing volume files.
CohortManifest load_manifest(const std::string& path);

void save_manifest(const CohortManifest& manifest, const std::string& path);

} // namespace ssmkit
