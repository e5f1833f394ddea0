#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "xifn/transform.hpp"

namespace xifn {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Sample/coefficient vectors on the wire:
//   { "algebra": "c2", "family": "s+", "M": 4, "kind": "samples",
//     "entries": [ {"cab": [c,a,b], "sheet": "base", "re": .., "im": ..}, .. ] }
// Entries carry the sheet tag because base and reflected points can share a
// [c,a,b] triple.  Readers require exactly one entry per grid/weight point and
// report any missing [c,a,b] by name.
nlohmann::json to_json(const SampleVector& v);
nlohmann::json to_json(const CoeffVector& v);
SampleVector sample_from_json(const nlohmann::json& j);
CoeffVector coeff_from_json(const nlohmann::json& j);

// Grid and weight sets: arrays of {cab, sheet, coords{num, den}}.
nlohmann::json grid_to_json(Algebra kind, Family fam, i64 M);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace xifn
