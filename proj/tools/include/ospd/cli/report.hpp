#pragma once

// Plain-data renderings of library values. Objects are nlohmann::json with
// its default std::map storage, so keys come out sorted and dumps are
// canonical.

#include "ospd/decomp/modules.hpp"
#include "ospd/decomp/screen.hpp"
#include "ospd/decomp/verify.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace ospd::cli {

using json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "1";

// {"re": "p/q", "im": "r/s"}
json scalar_json(const exactlin::Scalar& s);
// Row-major array of rows.
json matrix_json(const exactlin::ExactMatrix& m);

// {label, blockSizes, form, basis: [{parity, entries}]}
json algebra_dump(const superalg::Superalgebra& a);

json fingerprint_json(const superalg::StructureFingerprint& f);
json report_json(const decomp::DecompositionReport& r);
json components_json(const std::vector<repmod::ModuleComponent>& parts);
json module_table_json(const decomp::ModuleTable& t);
json screen_row_json(const decomp::ScreenRow& row);

// {schemaVersion, command, results, timing}; timing is null unless given.
json document(const json& command, const json& results, const json& timing = nullptr);

std::string canonical_dump(const json& doc);

// Writes via a temporary file in the same directory and a rename, so readers
// never observe a partial file.
void write_atomic(const std::filesystem::path& path, const std::string& text);

}  // namespace ospd::cli
