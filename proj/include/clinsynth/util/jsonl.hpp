#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

namespace clinsynth::util {

/// Reads a UTF-8 text file fully. Throws std::runtime_error on IO failure.
std::string read_file(const std::filesystem::path& path);

void write_file(const std::filesystem::path& path, std::string_view content);

/// Calls fn(line_number, line) for every line, 1-based. Blank lines are
/// skipped (trailing newline at EOF does not produce an empty record).
void for_each_line(const std::filesystem::path& path,
                   const std::function<void(int, const std::string&)>& fn);

void write_lines(const std::filesystem::path& path, const std::vector<std::string>& lines);

}  // namespace clinsynth::util
