#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "semihilbert/matrix.hpp"

namespace semihilbert {

/// {"rows": n, "cols": m, "re": [[...]], "im": [[...]]}, row-major, finite
/// doubles written with round-trip precision.
std::string matrix_to_json(const ComplexMatrix& m);

/// Throws ParseError naming the offending field (or the line of a syntax
/// error) and ShapeError for an empty matrix.
ComplexMatrix matrix_from_json(std::string_view text);

ComplexMatrix read_matrix(const std::filesystem::path& path);
void write_matrix(const std::filesystem::path& path, const ComplexMatrix& m);

}  // namespace semihilbert
