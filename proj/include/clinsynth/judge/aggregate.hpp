#pragma once

#include "clinsynth/judge/votes.hpp"
#include "clinsynth/metrics/stat_tests.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace clinsynth::judge {

struct WinRateCell {
    std::string dimension;
    std::string rival_backend_id;
    std::size_t wins = 0;
    std::size_t ties = 0;
    std::size_t losses = 0;
    double win_rate = 0.0;
    double tie_rate = 0.0;
    double loss_rate = 0.0;  // computed as 1 - win - tie, so the sum is exact
};

/// Target win/tie/loss rates per (dimension, rival). The rival attribution
/// comes from the unmasking map. Throws on an empty vote list.
std::vector<WinRateCell> win_rates(const std::vector<JudgeVote>& votes, const PairSet& pairs);

enum class HumanAggregation { per_pair_majority, per_rater };

struct AgreementResult {
    std::string dimension;
    /// Rows: machine verdict (A, B, Tie); columns: human verdict.
    std::array<std::array<std::size_t, 3>, 3> table{};
    std::size_t shared_pairs = 0;
    metrics::TestResult test;
    bool degenerate = false;  // margins too thin for a chi-square test
};

/// Machine-vs-human contingency per dimension over the shared pair set, with
/// a Pearson chi-square test (df = 4 for a full 3x3 table; all-zero verdict
/// rows/columns are compacted first). Human votes aggregate per pair by
/// majority (ties -> Tie) unless per_rater pairs each rater's vote with the
/// machine's. A dimension with no shared pairs throws.
std::vector<AgreementResult> agreement(const std::vector<JudgeVote>& votes_machine,
                                       const std::vector<JudgeVote>& votes_human,
                                       HumanAggregation aggregation =
                                           HumanAggregation::per_pair_majority);

struct LikertRating {
    std::string case_id;
    std::string item;
    int score = 0;  // 1..5
    std::string rater_id;
};

struct LikertSummary {
    std::string item;
    double mean = 0.0;
    std::size_t n = 0;
    bool pass = false;  // mean strictly above half the scale maximum
};

/// Mean score per item with the paper's pass rule (mean > 0.5 * scale_max,
/// strict). Ratings outside 1..scale_max or items without ratings throw.
std::vector<LikertSummary> likert_summary(const std::vector<LikertRating>& ratings,
                                          const std::vector<std::string>& items,
                                          int scale_max = 5);

std::vector<LikertRating> load_likert_ratings(const std::filesystem::path& path);

}  // namespace clinsynth::judge
