#include "clinsynth/metrics/overlap.hpp"

#include "clinsynth/util/text.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace clinsynth::metrics {

namespace {

using NgramCounts = std::map<std::vector<std::string>, std::size_t>;

NgramCounts count_ngrams(const std::vector<std::string>& tokens, int n) {
    NgramCounts counts;
    if (n <= 0 || tokens.size() < static_cast<std::size_t>(n)) {
        return counts;
    }
    for (std::size_t i = 0; i + static_cast<std::size_t>(n) <= tokens.size(); ++i) {
        std::vector<std::string> gram(tokens.begin() + static_cast<std::ptrdiff_t>(i),
                                      tokens.begin() + static_cast<std::ptrdiff_t>(i) + n);
        counts[std::move(gram)] += 1;
    }
    return counts;
}

// Clipped overlap and candidate total for one order.
struct OrderStats {
    std::size_t hits = 0;
    std::size_t total = 0;
};

OrderStats clipped_overlap(const std::vector<std::string>& cand,
                           const std::vector<std::string>& ref, int n) {
    OrderStats s;
    const NgramCounts c = count_ngrams(cand, n);
    const NgramCounts r = count_ngrams(ref, n);
    for (const auto& [gram, count] : c) {
        s.total += count;
        const auto it = r.find(gram);
        if (it != r.end()) {
            s.hits += std::min(count, it->second);
        }
    }
    return s;
}

Prf prf_from(std::size_t hits, std::size_t cand_total, std::size_t ref_total) {
    Prf out;
    out.precision = cand_total == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(cand_total);
    out.recall = ref_total == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(ref_total);
    out.f1 = (out.precision + out.recall) == 0.0
                 ? 0.0
                 : 2.0 * out.precision * out.recall / (out.precision + out.recall);
    return out;
}

}  // namespace

std::vector<std::string> overlap_tokens(std::string_view text) {
    return util::split_whitespace(util::normalize_for_match(text));
}

double bleu_n(std::string_view candidate, std::string_view reference, int n, bool smooth) {
    if (n < 1) {
        throw std::invalid_argument("bleu_n: n must be >= 1");
    }
    const auto cand = overlap_tokens(candidate);
    const auto ref = overlap_tokens(reference);
    if (cand.empty()) {
        return 0.0;
    }
    double log_sum = 0.0;
    for (int order = 1; order <= n; ++order) {
        const OrderStats s = clipped_overlap(cand, ref, order);
        double p;
        if (smooth) {
            p = static_cast<double>(s.hits + 1) / static_cast<double>(s.total + 1);
        } else {
            if (s.hits == 0 || s.total == 0) {
                return 0.0;
            }
            p = static_cast<double>(s.hits) / static_cast<double>(s.total);
        }
        log_sum += std::log(p);
    }
    const double geo_mean = std::exp(log_sum / static_cast<double>(n));
    const double c = static_cast<double>(cand.size());
    const double r = static_cast<double>(ref.size());
    const double bp = c < r ? std::exp(1.0 - r / c) : 1.0;
    return bp * geo_mean;
}

Prf rouge_n(std::string_view candidate, std::string_view reference, int n) {
    if (n < 1) {
        throw std::invalid_argument("rouge_n: n must be >= 1");
    }
    const auto cand = overlap_tokens(candidate);
    const auto ref = overlap_tokens(reference);
    const OrderStats s = clipped_overlap(cand, ref, n);
    const NgramCounts r = count_ngrams(ref, n);
    std::size_t ref_total = 0;
    for (const auto& [gram, count] : r) {
        ref_total += count;
    }
    return prf_from(s.hits, s.total, ref_total);
}

std::size_t lcs_length(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    if (a.empty() || b.empty()) {
        return 0;
    }
    std::vector<std::size_t> prev(b.size() + 1, 0);
    std::vector<std::size_t> curr(b.size() + 1, 0);
    for (std::size_t i = 1; i <= a.size(); ++i) {
        for (std::size_t j = 1; j <= b.size(); ++j) {
            if (a[i - 1] == b[j - 1]) {
                curr[j] = prev[j - 1] + 1;
            } else {
                curr[j] = std::max(prev[j], curr[j - 1]);
            }
        }
        std::swap(prev, curr);
    }
    return prev[b.size()];
}

Prf rouge_l(std::string_view candidate, std::string_view reference) {
    const auto cand = overlap_tokens(candidate);
    const auto ref = overlap_tokens(reference);
    const std::size_t lcs = lcs_length(cand, ref);
    return prf_from(lcs, cand.size(), ref.size());
}

}  // namespace clinsynth::metrics
