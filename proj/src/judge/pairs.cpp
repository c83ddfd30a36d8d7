#include "clinsynth/judge/pairs.hpp"

#include "clinsynth/util/hash.hpp"
#include "clinsynth/util/jsonl.hpp"
#include "clinsynth/util/text.hpp"

#include "json.hpp"

#include <algorithm>
#include <stdexcept>

namespace clinsynth::judge {

using nlohmann::json;

const UnmaskEntry& PairSet::unmask_for(const std::string& pair_id) const {
    for (const auto& e : unmask) {
        if (e.pair_id == pair_id) {
            return e;
        }
    }
    throw std::invalid_argument("no unmask entry for pair " + pair_id);
}

std::string render_masked_transcript(const corpus::Dialogue& dialogue,
                                     std::string_view psychiatrist_label) {
    std::string out;
    for (const auto& u : dialogue.utterances) {
        out += u.speaker == corpus::Speaker::psychiatrist ? std::string(psychiatrist_label)
                                                          : "Client";
        out += ": ";
        out += u.text;
        out += '\n';
    }
    return out;
}

PairSet build_pairs(const simulate::TranscriptSet& transcripts,
                    const std::string& target_backend_id, std::uint64_t seed,
                    const std::vector<std::string>& known_model_names) {
    // Masking scan covers every configured backend id and model name.
    std::vector<std::string> forbidden = known_model_names;
    for (const auto& t : transcripts.transcripts) {
        forbidden.push_back(t.interviewer_backend_id);
        forbidden.push_back(t.patient_backend_id);
    }
    std::sort(forbidden.begin(), forbidden.end());
    forbidden.erase(std::unique(forbidden.begin(), forbidden.end()), forbidden.end());

    PairSet set;
    for (const auto& [profile_id, group] : transcripts.by_profile()) {
        const simulate::Transcript* target = nullptr;
        for (const auto* t : group) {
            if (t->interviewer_backend_id == target_backend_id) {
                target = t;
            }
        }
        if (target == nullptr) {
            throw std::invalid_argument("build_pairs: no transcript for target backend '" +
                                        target_backend_id + "' in profile " + profile_id);
        }
        for (const auto* rival : group) {
            if (rival->interviewer_backend_id == target_backend_id) {
                continue;
            }
            MaskedPair pair;
            pair.profile_id = profile_id;
            pair.pair_id =
                "pair_" +
                util::sha256_hex(profile_id + "|" + rival->interviewer_backend_id).substr(0, 12);
            pair.flip =
                (util::derive_subseed(seed, "flip:" + pair.pair_id) & 1ULL) == 1ULL;

            const std::string target_text =
                render_masked_transcript(target->dialogue, "Psychiatrist A");
            const std::string rival_text =
                render_masked_transcript(rival->dialogue, "Psychiatrist B");
            // Presented slot A holds the rival when flipped.
            if (pair.flip) {
                pair.transcript_a = render_masked_transcript(rival->dialogue, "Psychiatrist A");
                pair.transcript_b = render_masked_transcript(target->dialogue, "Psychiatrist B");
            } else {
                pair.transcript_a = target_text;
                pair.transcript_b = rival_text;
            }

            for (const auto& name : forbidden) {
                if (name.empty()) {
                    continue;
                }
                if (util::to_lower(pair.transcript_a).find(util::to_lower(name)) !=
                        std::string::npos ||
                    util::to_lower(pair.transcript_b).find(util::to_lower(name)) !=
                        std::string::npos) {
                    throw std::runtime_error("build_pairs: masking violation, '" + name +
                                             "' appears in pair " + pair.pair_id);
                }
            }

            set.unmask.push_back({pair.pair_id, profile_id, pair.flip, target_backend_id,
                                  rival->interviewer_backend_id});
            set.pairs.push_back(std::move(pair));
        }
    }
    return set;
}

void save_pairs(const std::filesystem::path& pairs_path, const PairSet& set) {
    std::vector<std::string> lines;
    lines.reserve(set.pairs.size());
    for (const auto& p : set.pairs) {
        lines.push_back(json{{"pair_id", p.pair_id},
                             {"profile_id", p.profile_id},
                             {"transcript_a", p.transcript_a},
                             {"transcript_b", p.transcript_b},
                             {"flip", p.flip}}
                            .dump());
    }
    util::write_lines(pairs_path, lines);
}

void save_unmask_map(const std::filesystem::path& unmask_path, const PairSet& set) {
    std::vector<std::string> lines;
    lines.reserve(set.unmask.size());
    for (const auto& e : set.unmask) {
        lines.push_back(json{{"pair_id", e.pair_id},
                             {"profile_id", e.profile_id},
                             {"flip", e.flip},
                             {"target_backend_id", e.target_backend_id},
                             {"rival_backend_id", e.rival_backend_id}}
                            .dump());
    }
    util::write_lines(unmask_path, lines);
}

PairSet load_pairs(const std::filesystem::path& pairs_path,
                   const std::filesystem::path& unmask_path) {
    PairSet set;
    util::for_each_line(pairs_path, [&](int, const std::string& line) {
        const json j = json::parse(line);
        MaskedPair p;
        p.pair_id = j.at("pair_id").get<std::string>();
        p.profile_id = j.at("profile_id").get<std::string>();
        p.transcript_a = j.at("transcript_a").get<std::string>();
        p.transcript_b = j.at("transcript_b").get<std::string>();
        p.flip = j.at("flip").get<bool>();
        set.pairs.push_back(std::move(p));
    });
    util::for_each_line(unmask_path, [&](int, const std::string& line) {
        const json j = json::parse(line);
        set.unmask.push_back({j.at("pair_id").get<std::string>(),
                              j.at("profile_id").get<std::string>(), j.at("flip").get<bool>(),
                              j.at("target_backend_id").get<std::string>(),
                              j.at("rival_backend_id").get<std::string>()});
    });
    return set;
}

}  // namespace clinsynth::judge
