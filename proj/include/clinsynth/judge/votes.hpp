#pragma once

#include "clinsynth/backend/gateway.hpp"
#include "clinsynth/judge/dimensions.hpp"
#include "clinsynth/judge/pairs.hpp"
#include "clinsynth/synthgen/template.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace clinsynth::judge {

/// Verdicts are stored un-flipped: A always credits the original slot A
/// (the target model), regardless of the order the judge saw.
enum class Verdict { A, B, Tie };

std::string_view to_string(Verdict v);
std::optional<Verdict> verdict_from_string(std::string_view s);

enum class Rater { machine_judge, human };

std::string_view to_string(Rater r);

struct JudgeVote {
    std::string pair_id;
    std::string dimension;
    Verdict verdict = Verdict::Tie;
    Rater rater = Rater::machine_judge;
    std::string rater_id;
    /// Set when the judge reply was unparseable and the vote fell back to a
    /// conservative Tie.
    bool parse_flag = false;
};

/// One prompt presenting both transcripts and the requested rubrics; the
/// reply is parsed into one verdict per dimension and un-flipped before
/// storage. An unparseable per-dimension verdict becomes Tie with
/// parse_flag set.
std::vector<JudgeVote> judge_pair(const MaskedPair& pair,
                                  const std::vector<Dimension>& dimensions,
                                  backend::Gateway& gateway, const std::string& judge_backend_id,
                                  const synthgen::PromptTemplate& judge_template);

/// Builds the exact judge-facing prompt (exposed for masking audits).
std::string render_judge_prompt(const MaskedPair& pair,
                                const std::vector<Dimension>& dimensions,
                                const synthgen::PromptTemplate& judge_template);

/// Un-flips a verdict expressed in presented (judge-visible) space.
Verdict unflip(Verdict presented, bool flip);

/// Imports human annotation JSONL ({pair_id, dimension, verdict, rater_id}).
/// Raters vote on the pairs as presented, so each vote is un-flipped through
/// the pair set's flip bits.
std::vector<JudgeVote> import_human_votes(const std::filesystem::path& path,
                                          const PairSet& pairs);

void save_votes(const std::filesystem::path& path, const std::vector<JudgeVote>& votes);
std::vector<JudgeVote> load_votes(const std::filesystem::path& path);

}  // namespace clinsynth::judge
