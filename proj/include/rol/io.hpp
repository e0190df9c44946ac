#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "rol/rolkit.hpp"
#include "rol/svd.hpp"

namespace rol::io {

using Json = nlohmann::ordered_json;

enum class Format { Json, Csv };

Format format_from_string(const std::string& name);

/// {"rows": m, "cols": n, "field": "real"|"complex", "data": [[...], ...]}
/// with complex entries written as [re, im].
Json matrix_to_json(const Matrix& m);

/// Accepts real entries as numbers and complex ones as [re, im] pairs.
/// A "real" matrix with nonzero imaginary parts is rejected. Throws ParseError.
Matrix matrix_from_json(const Json& j);

/// One row per line, comma separated. Throws InvalidArgument for complex input.
std::string matrix_to_csv(const Matrix& m);
Matrix matrix_from_csv(std::string_view text);

/// Reads JSON or CSV; the format is sniffed from the first non-blank character.
/// Throws IoError when the file cannot be read and ParseError on bad content.
Matrix load_matrix(const std::filesystem::path& path);
void save_matrix(const std::filesystem::path& path, const Matrix& m, Format format = Format::Json);

Json svd_to_json(const SvdFactors& svd);
Json report_to_json(const RolReport& report);
Json twelve_way_to_json(const TwelveWay& twelve, double tol);
Json weak_class_to_json(const WeakClass& weak, double tol);

} // namespace rol::io
