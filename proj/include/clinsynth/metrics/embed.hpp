#pragma once

#include "clinsynth/metrics/overlap.hpp"

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace clinsynth::metrics {

/// Maps a token to a fixed-dimension embedding vector.
using TokenEmbedder = std::function<std::vector<double>(const std::string&)>;

/// Greedy token-matching similarity: precision is the mean over candidate
/// tokens of the max cosine similarity to any reference token; recall is
/// symmetric; f1 harmonic. No idf weighting.
Prf embed_match_f1(const std::vector<std::string>& cand_tokens,
                   const std::vector<std::string>& ref_tokens, const TokenEmbedder& embedder);

/// Tokenizes with overlap_tokens then scores.
Prf embed_match_f1(std::string_view candidate, std::string_view reference,
                   const TokenEmbedder& embedder);

/// Deterministic unit vectors derived from a token hash. A structural
/// stand-in so the full score layout works offline; bind a real encoder for
/// semantically meaningful values.
TokenEmbedder hashed_embedder(std::size_t dim = 64);

}  // namespace clinsynth::metrics
