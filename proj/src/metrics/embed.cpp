#include "clinsynth/metrics/embed.hpp"

#include "clinsynth/util/hash.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace clinsynth::metrics {

namespace {

double cosine(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("embed_match_f1: embedder returned mixed dimensions");
    }
    double dot = 0.0;
    double na = 0.0;
    double nb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        dot += a[i] * b[i];
        na += a[i] * a[i];
        nb += b[i] * b[i];
    }
    if (na == 0.0 || nb == 0.0) {
        return 0.0;
    }
    return dot / (std::sqrt(na) * std::sqrt(nb));
}

double greedy_side(const std::vector<std::vector<double>>& from,
                   const std::vector<std::vector<double>>& to) {
    double sum = 0.0;
    for (const auto& v : from) {
        double best = 0.0;
        for (const auto& w : to) {
            best = std::max(best, cosine(v, w));
        }
        sum += best;
    }
    return sum / static_cast<double>(from.size());
}

}  // namespace

Prf embed_match_f1(const std::vector<std::string>& cand_tokens,
                   const std::vector<std::string>& ref_tokens, const TokenEmbedder& embedder) {
    Prf out;
    if (cand_tokens.empty() || ref_tokens.empty()) {
        return out;
    }
    std::vector<std::vector<double>> cand;
    cand.reserve(cand_tokens.size());
    for (const auto& t : cand_tokens) {
        cand.push_back(embedder(t));
    }
    std::vector<std::vector<double>> ref;
    ref.reserve(ref_tokens.size());
    for (const auto& t : ref_tokens) {
        ref.push_back(embedder(t));
    }
    out.precision = greedy_side(cand, ref);
    out.recall = greedy_side(ref, cand);
    out.f1 = (out.precision + out.recall) == 0.0
                 ? 0.0
                 : 2.0 * out.precision * out.recall / (out.precision + out.recall);
    return out;
}

Prf embed_match_f1(std::string_view candidate, std::string_view reference,
                   const TokenEmbedder& embedder) {
    return embed_match_f1(overlap_tokens(candidate), overlap_tokens(reference), embedder);
}

TokenEmbedder hashed_embedder(std::size_t dim) {
    if (dim == 0) {
        throw std::invalid_argument("hashed_embedder: dim must be > 0");
    }
    return [dim](const std::string& token) {
        std::mt19937_64 rng(util::derive_subseed(0x9e3779b97f4a7c15ULL, token));
        std::normal_distribution<double> gauss(0.0, 1.0);
        std::vector<double> v(dim);
        double norm = 0.0;
        for (auto& x : v) {
            x = gauss(rng);
            norm += x * x;
        }
        norm = std::sqrt(norm);
        for (auto& x : v) {
            x /= norm;
        }
        return v;
    };
}

}  // namespace clinsynth::metrics
