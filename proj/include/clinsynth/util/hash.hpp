#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace clinsynth::util {

/// Hex-encoded SHA-256 digest.
std::string sha256_hex(std::string_view data);

/// Stable 64-bit sub-seed for a named consumer of a global seed. All module
/// randomness is derived through this so one --seed reproduces a full run.
std::uint64_t derive_subseed(std::uint64_t seed, std::string_view scope);

}  // namespace clinsynth::util
