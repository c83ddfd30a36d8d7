#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace clinsynth::metrics {

enum class TestKind { welch_t, chi_square };

struct TestResult {
    double statistic = 0.0;
    double df = 0.0;
    double p_value = 1.0;
    TestKind kind = TestKind::welch_t;
    /// Set when zero-variance input forced a limit answer instead of the
    /// usual formula (t-test only).
    bool degenerate = false;
};

/// Two-sample t-test, Welch by default (unequal variances,
/// Welch-Satterthwaite df); pooled=true uses the equal-variance pooled form
/// with df = na + nb - 2. Requires at least two observations per sample.
/// Zero variance in both samples: equal means give t=0/p=1, unequal means
/// give p=0 with the degenerate flag set.
TestResult welch_t_test(std::span<const double> a, std::span<const double> b,
                        bool pooled = false);

/// Pearson chi-square test of independence, no continuity correction,
/// df = (r-1)(c-1). Throws std::invalid_argument on an all-zero row/column,
/// a negative count, or a table smaller than 2x2.
TestResult chi_square_independence(const std::vector<std::vector<double>>& table);

}  // namespace clinsynth::metrics
