#include "clinsynth/judge/votes.hpp"

#include "clinsynth/util/jsonl.hpp"
#include "clinsynth/util/text.hpp"

#include "json.hpp"

#include <stdexcept>

namespace clinsynth::judge {

using nlohmann::json;

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::A:
            return "A";
        case Verdict::B:
            return "B";
        case Verdict::Tie:
            return "tie";
    }
    return "unknown";
}

std::optional<Verdict> verdict_from_string(std::string_view s) {
    const std::string lower = util::to_lower(s);
    if (lower == "a") {
        return Verdict::A;
    }
    if (lower == "b") {
        return Verdict::B;
    }
    if (lower == "tie" || lower == "draw" || lower == "equal") {
        return Verdict::Tie;
    }
    return std::nullopt;
}

std::string_view to_string(Rater r) {
    return r == Rater::machine_judge ? "machine_judge" : "human";
}

Verdict unflip(Verdict presented, bool flip) {
    if (!flip || presented == Verdict::Tie) {
        return presented;
    }
    return presented == Verdict::A ? Verdict::B : Verdict::A;
}

std::string render_judge_prompt(const MaskedPair& pair,
                                const std::vector<Dimension>& dimensions,
                                const synthgen::PromptTemplate& judge_template) {
    std::string rubrics;
    for (const auto& d : dimensions) {
        rubrics += "- " + d.id + ": " + d.rubric + "\n";
    }
    return judge_template.render({{"transcript_a", pair.transcript_a},
                                  {"transcript_b", pair.transcript_b},
                                  {"rubrics", rubrics}});
}

std::vector<JudgeVote> judge_pair(const MaskedPair& pair,
                                  const std::vector<Dimension>& dimensions,
                                  backend::Gateway& gateway, const std::string& judge_backend_id,
                                  const synthgen::PromptTemplate& judge_template) {
    for (const auto& d : dimensions) {
        if (find_dimension(d.id) == nullptr) {
            throw std::invalid_argument("judge_pair: dimension not in registry: " + d.id);
        }
    }
    const std::string prompt = render_judge_prompt(pair, dimensions, judge_template);
    const std::string reply =
        gateway.complete(judge_backend_id, {backend::user_msg(prompt)});

    std::vector<JudgeVote> votes;
    for (const auto& d : dimensions) {
        JudgeVote vote;
        vote.pair_id = pair.pair_id;
        vote.dimension = d.id;
        vote.rater = Rater::machine_judge;
        vote.rater_id = judge_backend_id;

        std::optional<Verdict> presented;
        for (const auto& line : util::split_lines(reply)) {
            const std::string t = util::trim(line);
            const std::size_t colon = t.find(':');
            if (colon == std::string::npos) {
                continue;
            }
            std::string key = util::trim(t.substr(0, colon));
            while (!key.empty() && (key.front() == '-' || key.front() == '*')) {
                key.erase(key.begin());
                key = util::trim(key);
            }
            if (key != d.id) {
                continue;
            }
            presented = verdict_from_string(util::trim(t.substr(colon + 1)));
            break;
        }
        if (presented) {
            vote.verdict = unflip(*presented, pair.flip);
        } else {
            vote.verdict = Verdict::Tie;  // conservative: keeps pair counts aligned
            vote.parse_flag = true;
        }
        votes.push_back(std::move(vote));
    }
    return votes;
}

std::vector<JudgeVote> import_human_votes(const std::filesystem::path& path,
                                          const PairSet& pairs) {
    std::vector<JudgeVote> votes;
    util::for_each_line(path, [&](int line_no, const std::string& line) {
        const json j = json::parse(line);
        JudgeVote vote;
        vote.pair_id = j.at("pair_id").get<std::string>();
        vote.dimension = j.at("dimension").get<std::string>();
        if (find_dimension(vote.dimension) == nullptr) {
            throw std::runtime_error("human votes line " + std::to_string(line_no) +
                                     ": unknown dimension " + vote.dimension);
        }
        const auto presented = verdict_from_string(j.at("verdict").get<std::string>());
        if (!presented) {
            throw std::runtime_error("human votes line " + std::to_string(line_no) +
                                     ": bad verdict");
        }
        vote.verdict = unflip(*presented, pairs.unmask_for(vote.pair_id).flip);
        vote.rater = Rater::human;
        vote.rater_id = j.at("rater_id").get<std::string>();
        votes.push_back(std::move(vote));
    });
    return votes;
}

void save_votes(const std::filesystem::path& path, const std::vector<JudgeVote>& votes) {
    std::vector<std::string> lines;
    lines.reserve(votes.size());
    for (const auto& v : votes) {
        lines.push_back(json{{"pair_id", v.pair_id},
                             {"dimension", v.dimension},
                             {"verdict", std::string(to_string(v.verdict))},
                             {"rater", std::string(to_string(v.rater))},
                             {"rater_id", v.rater_id},
                             {"parse_flag", v.parse_flag}}
                            .dump());
    }
    util::write_lines(path, lines);
}

std::vector<JudgeVote> load_votes(const std::filesystem::path& path) {
    std::vector<JudgeVote> votes;
    util::for_each_line(path, [&](int line_no, const std::string& line) {
        const json j = json::parse(line);
        JudgeVote v;
        v.pair_id = j.at("pair_id").get<std::string>();
        v.dimension = j.at("dimension").get<std::string>();
        const auto verdict = verdict_from_string(j.at("verdict").get<std::string>());
        if (!verdict) {
            throw std::runtime_error("votes line " + std::to_string(line_no) + ": bad verdict");
        }
        v.verdict = *verdict;
        v.rater = j.at("rater").get<std::string>() == "human" ? Rater::human
                                                              : Rater::machine_judge;
        v.rater_id = j.value("rater_id", "");
        v.parse_flag = j.value("parse_flag", false);
        votes.push_back(std::move(v));
    });
    return votes;
}

}  // namespace clinsynth::judge
