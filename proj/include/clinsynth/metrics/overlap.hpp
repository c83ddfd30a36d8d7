#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace clinsynth::metrics {

struct Prf {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

/// Tokenization shared by every overlap metric: lowercase, punctuation
/// stripped, whitespace split. Fixed so scores are comparable across runs.
std::vector<std::string> overlap_tokens(std::string_view text);

/// Sentence BLEU against a single reference: clipped modified n-gram
/// precisions for orders 1..n, uniform-weight geometric mean, brevity
/// penalty exp(1 - r/c) when c < r. Without smoothing any zero-count order
/// zeroes the score; with smoothing each order uses (hits+1)/(total+1).
double bleu_n(std::string_view candidate, std::string_view reference, int n = 2,
              bool smooth = false);

/// Clipped n-gram overlap. recall = overlap/|ref ngrams|,
/// precision = overlap/|cand ngrams|, f1 harmonic; all 0 on empty gram sets.
Prf rouge_n(std::string_view candidate, std::string_view reference, int n);

/// Token-level longest common subsequence. P = LCS/|cand|, R = LCS/|ref|.
Prf rouge_l(std::string_view candidate, std::string_view reference);

std::size_t lcs_length(const std::vector<std::string>& a, const std::vector<std::string>& b);

struct OverlapScores {
    double bleu2 = 0.0;
    Prf rouge1;
    Prf rouge2;
    Prf rougel;
    std::optional<Prf> embed_f1;
};

}  // namespace clinsynth::metrics
