#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "bym/core.hpp"
#include "bym/yangmills.hpp"

namespace bym {

// Matrix file format: { "dim": n, "entries": [[[re,im], ...], ...] },
// row-major. The writer emits 17 significant digits so values survive a
// round trip exactly; re-emitting a parsed file is byte-identical.

Matrix matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const Matrix& m);

std::string write_matrix(const Matrix& m);
Matrix parse_matrix(const std::string& text);

Matrix read_matrix_file(const std::filesystem::path& path);
void write_matrix_file(const std::filesystem::path& path, const Matrix& m);

/// Curve file: JSON array of matrix objects, parsed as density matrices.
std::vector<DensityMatrix> read_curve_file(const std::filesystem::path& path,
                                           bool normalized);

nlohmann::ordered_json report_to_json(const YmReport& report);
std::string report_to_csv(const YmReport& report);

}  // namespace bym
