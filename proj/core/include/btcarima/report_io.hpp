#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace btcarima {

/// Locale-independent decimal with 9 significant digits; empty for
/// non-finite values.
[[nodiscard]] std::string format_number(double value);

/// `value` rounded to 9 significant digits (identity for non-finite input).
[[nodiscard]] double round_significant(double value);

/// Writes to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

/// Lower-case hex SHA-256 digest.
[[nodiscard]] std::string sha256_hex(std::string_view bytes);

} // namespace btcarima
