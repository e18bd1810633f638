#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace tfp {

/// Writes `content` to a sibling temporary file, flushes it and renames it
/// over `path`. Readers see either the old file or the complete new one.
/// Throws IoError.
void atomic_write(const std::filesystem::path& path, std::string_view content);

/// Whole file as a string. Throws IoError.
std::string read_file(const std::filesystem::path& path);

/// Lowercase hex SHA-256 of `data`.
std::string sha256_hex(std::string_view data);

}  // namespace tfp
