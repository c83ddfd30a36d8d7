#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace clinsynth::util {

std::string trim(std::string_view s);
std::string to_lower(std::string_view s);

/// Splits on runs of whitespace. Recognizes ASCII whitespace plus the common
/// Unicode space code points (NBSP, the U+2000 block, ideographic space).
std::vector<std::string> split_whitespace(std::string_view s);

std::size_t word_count(std::string_view s);

/// Lowercase, punctuation stripped, whitespace collapsed to single spaces.
/// Shared normalization for alias lookup, dedup, and leak matching.
std::string normalize_for_match(std::string_view s);

/// Case-insensitive search for `phrase` in `text` on word boundaries,
/// after normalize_for_match on both sides.
bool contains_phrase(std::string_view text, std::string_view phrase);

std::string replace_all(std::string_view s, std::string_view from, std::string_view to);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

std::vector<std::string> split_lines(std::string_view s);

}  // namespace clinsynth::util
