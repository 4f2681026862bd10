#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "explab/exactla/matrix.hpp"

namespace explab {

// Text format: a header line "rows cols", then `rows` lines of `cols`
// whitespace-separated integers. Lines starting with '#' are ignored.
IntMatrix parse_matrix(std::string_view text);
IntMatrix read_matrix_file(const std::filesystem::path& path);
std::string format_matrix(const IntMatrix& m);
void write_matrix_file(const std::filesystem::path& path, const IntMatrix& m);

// Whitespace-separated integers, any line layout.
IntVector parse_int_vector(std::string_view text);
IntVector read_vector_file(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace explab
