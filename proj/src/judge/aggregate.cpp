#include "clinsynth/judge/aggregate.hpp"

#include "clinsynth/util/jsonl.hpp"

#include "json.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace clinsynth::judge {

using nlohmann::json;

std::vector<WinRateCell> win_rates(const std::vector<JudgeVote>& votes, const PairSet& pairs) {
    if (votes.empty()) {
        throw std::invalid_argument("win_rates: no votes");
    }
    std::map<std::pair<std::string, std::string>, WinRateCell> cells;
    for (const auto& vote : votes) {
        const UnmaskEntry& entry = pairs.unmask_for(vote.pair_id);
        const auto key = std::make_pair(vote.dimension, entry.rival_backend_id);
        WinRateCell& cell = cells[key];
        cell.dimension = vote.dimension;
        cell.rival_backend_id = entry.rival_backend_id;
        switch (vote.verdict) {
            case Verdict::A:
                ++cell.wins;
                break;
            case Verdict::B:
                ++cell.losses;
                break;
            case Verdict::Tie:
                ++cell.ties;
                break;
        }
    }
    std::vector<WinRateCell> out;
    out.reserve(cells.size());
    for (auto& [key, cell] : cells) {
        const double n = static_cast<double>(cell.wins + cell.ties + cell.losses);
        cell.win_rate = static_cast<double>(cell.wins) / n;
        cell.tie_rate = static_cast<double>(cell.ties) / n;
        cell.loss_rate = 1.0 - cell.win_rate - cell.tie_rate;
        out.push_back(cell);
    }
    return out;
}

namespace {

std::size_t verdict_index(Verdict v) {
    switch (v) {
        case Verdict::A:
            return 0;
        case Verdict::B:
            return 1;
        case Verdict::Tie:
            return 2;
    }
    return 2;
}

Verdict majority(const std::vector<Verdict>& verdicts) {
    std::array<std::size_t, 3> counts{};
    for (const Verdict v : verdicts) {
        counts[verdict_index(v)] += 1;
    }
    const std::size_t best = std::max({counts[0], counts[1], counts[2]});
    // Clear winner or Tie; a tied majority is itself a Tie.
    if (counts[0] == best && counts[1] != best && counts[2] != best) {
        return Verdict::A;
    }
    if (counts[1] == best && counts[0] != best && counts[2] != best) {
        return Verdict::B;
    }
    return Verdict::Tie;
}

// Drops all-zero rows/columns so the chi-square margins are valid.
std::vector<std::vector<double>> compact_table(
    const std::array<std::array<std::size_t, 3>, 3>& table) {
    std::array<bool, 3> keep_row{};
    std::array<bool, 3> keep_col{};
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            if (table[i][j] > 0) {
                keep_row[i] = true;
                keep_col[j] = true;
            }
        }
    }
    std::vector<std::vector<double>> compact;
    for (std::size_t i = 0; i < 3; ++i) {
        if (!keep_row[i]) {
            continue;
        }
        std::vector<double> row;
        for (std::size_t j = 0; j < 3; ++j) {
            if (keep_col[j]) {
                row.push_back(static_cast<double>(table[i][j]));
            }
        }
        compact.push_back(std::move(row));
    }
    return compact;
}

}  // namespace

std::vector<AgreementResult> agreement(const std::vector<JudgeVote>& votes_machine,
                                       const std::vector<JudgeVote>& votes_human,
                                       HumanAggregation aggregation) {
    std::map<std::pair<std::string, std::string>, Verdict> machine;  // (dimension, pair)
    std::set<std::string> dimensions;
    for (const auto& v : votes_machine) {
        machine[{v.dimension, v.pair_id}] = v.verdict;
        dimensions.insert(v.dimension);
    }

    // (dimension, pair) -> human verdicts from all raters.
    std::map<std::pair<std::string, std::string>, std::vector<Verdict>> human;
    for (const auto& v : votes_human) {
        human[{v.dimension, v.pair_id}].push_back(v.verdict);
        dimensions.insert(v.dimension);
    }

    std::vector<AgreementResult> results;
    for (const auto& dimension : dimensions) {
        AgreementResult result;
        result.dimension = dimension;
        for (const auto& [key, human_verdicts] : human) {
            if (key.first != dimension) {
                continue;
            }
            const auto mit = machine.find(key);
            if (mit == machine.end()) {
                continue;
            }
            result.shared_pairs += 1;
            const std::size_t mi = verdict_index(mit->second);
            if (aggregation == HumanAggregation::per_pair_majority) {
                result.table[mi][verdict_index(majority(human_verdicts))] += 1;
            } else {
                for (const Verdict hv : human_verdicts) {
                    result.table[mi][verdict_index(hv)] += 1;
                }
            }
        }
        if (result.shared_pairs == 0) {
            throw std::invalid_argument("agreement: no shared pairs for dimension " + dimension);
        }
        const auto compact = compact_table(result.table);
        if (compact.size() < 2 || compact[0].size() < 2) {
            result.degenerate = true;
            result.test.kind = metrics::TestKind::chi_square;
            result.test.statistic = 0.0;
            result.test.df = 0.0;
            result.test.p_value = 1.0;
        } else {
            result.test = metrics::chi_square_independence(compact);
        }
        results.push_back(std::move(result));
    }
    return results;
}

std::vector<LikertSummary> likert_summary(const std::vector<LikertRating>& ratings,
                                          const std::vector<std::string>& items, int scale_max) {
    if (scale_max < 1) {
        throw std::invalid_argument("likert_summary: scale_max must be >= 1");
    }
    std::set<std::string> known(items.begin(), items.end());
    for (const auto& r : ratings) {
        if (known.count(r.item) == 0) {
            throw std::invalid_argument("likert_summary: rating for unknown item " + r.item);
        }
        if (r.score < 1 || r.score > scale_max) {
            throw std::invalid_argument("likert_summary: score out of range for item " + r.item);
        }
    }
    std::vector<LikertSummary> out;
    const double threshold = 0.5 * static_cast<double>(scale_max);
    for (const auto& item : items) {
        LikertSummary s;
        s.item = item;
        double sum = 0.0;
        for (const auto& r : ratings) {
            if (r.item == item) {
                sum += static_cast<double>(r.score);
                s.n += 1;
            }
        }
        if (s.n == 0) {
            throw std::invalid_argument("likert_summary: item without ratings: " + item);
        }
        s.mean = sum / static_cast<double>(s.n);
        s.pass = s.mean > threshold;  // strict: "exceeds 50% of the maximum"
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<LikertRating> load_likert_ratings(const std::filesystem::path& path) {
    std::vector<LikertRating> ratings;
    util::for_each_line(path, [&](int line_no, const std::string& line) {
        try {
            const json j = json::parse(line);
            LikertRating r;
            r.case_id = j.at("case_id").get<std::string>();
            r.item = j.at("item").get<std::string>();
            r.score = j.at("score").get<int>();
            r.rater_id = j.at("rater_id").get<std::string>();
            ratings.push_back(std::move(r));
        } catch (const json::exception& e) {
            throw std::runtime_error("likert ratings line " + std::to_string(line_no) + ": " +
                                     e.what());
        }
    });
    return ratings;
}

}  // namespace clinsynth::judge
