#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hurstkit::io {

// Shortest representation that parses back to the identical double.
std::string format_double(double v);

// Fixed-point with the given number of decimals ("0.4747").
std::string format_fixed(double v, int decimals);

std::optional<double> parse_double(std::string_view text);

std::vector<std::string_view> split(std::string_view line, char sep);

// Splits on '\n', dropping a trailing '\r' on each line and a final empty line.
std::vector<std::string_view> lines(std::string_view text);

std::string read_file(const std::filesystem::path& path);

// Writes to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace hurstkit::io
