#include "clinsynth/simulate/tournament.hpp"

#include "clinsynth/corpus/io.hpp"
#include "clinsynth/util/hash.hpp"
#include "clinsynth/util/jsonl.hpp"
#include "clinsynth/util/parallel.hpp"

#include "json.hpp"

#include <stdexcept>

namespace clinsynth::simulate {

using nlohmann::json;

std::map<std::string, std::vector<const Transcript*>> TranscriptSet::by_profile() const {
    std::map<std::string, std::vector<const Transcript*>> groups;
    for (const auto& t : transcripts) {
        groups[t.dialogue.case_id].push_back(&t);
    }
    return groups;
}

TranscriptSet run_tournament(const std::vector<PatientProfile>& profiles,
                             const std::vector<std::string>& interviewer_backend_ids,
                             backend::Gateway& gateway, const SessionConfig& base_config,
                             const SimTemplates& templates) {
    if (profiles.empty()) {
        throw std::invalid_argument("run_tournament: need at least one profile");
    }
    if (interviewer_backend_ids.size() < 2) {
        throw std::invalid_argument("run_tournament: need at least two interviewers");
    }

    const std::size_t n = profiles.size() * interviewer_backend_ids.size();
    std::vector<std::optional<Transcript>> slots(n);
    std::vector<std::optional<TournamentError>> failures(n);

    util::parallel_for(n, 4, [&](std::size_t k) {
        const std::size_t pi = k / interviewer_backend_ids.size();
        const std::size_t ii = k % interviewer_backend_ids.size();
        const PatientProfile& profile = profiles[pi];
        SessionConfig config = base_config;
        config.interviewer_backend_id = interviewer_backend_ids[ii];
        config.seed = util::derive_subseed(base_config.seed,
                                           profile.case_id + ":" + config.interviewer_backend_id);
        Transcript t = run_interview(profile, gateway, config, templates);
        if (t.terminated_by == TerminationReason::error && t.dialogue.utterances.empty()) {
            failures[k] = TournamentError{profile.case_id, config.interviewer_backend_id, t.error};
        } else {
            slots[k] = std::move(t);
        }
    });

    TranscriptSet out;
    for (std::size_t k = 0; k < n; ++k) {
        if (slots[k]) {
            out.transcripts.push_back(std::move(*slots[k]));
        } else if (failures[k]) {
            out.errors.push_back(std::move(*failures[k]));
        }
    }
    return out;
}

std::string transcript_to_json_line(const Transcript& t) {
    json j = json::parse(corpus::dialogue_to_json_line(t.dialogue));
    j["terminated_by"] = std::string(to_string(t.terminated_by));
    j["utterance_backends"] = t.utterance_backends;
    j["interviewer_backend_id"] = t.interviewer_backend_id;
    j["patient_backend_id"] = t.patient_backend_id;
    j["end_marker_seen"] = t.end_marker_seen;
    if (!t.error.empty()) {
        j["error"] = t.error;
    }
    return j.dump();
}

void save_transcripts(const std::filesystem::path& path, const TranscriptSet& set) {
    std::vector<std::string> lines;
    lines.reserve(set.transcripts.size() + set.errors.size());
    for (const auto& t : set.transcripts) {
        lines.push_back(transcript_to_json_line(t));
    }
    for (const auto& e : set.errors) {
        lines.push_back(json{{"tournament_error",
                              {{"case_id", e.case_id},
                               {"interviewer_backend_id", e.interviewer_backend_id},
                               {"message", e.message}}}}
                            .dump());
    }
    util::write_lines(path, lines);
}

TranscriptSet load_transcripts(const std::filesystem::path& path) {
    TranscriptSet set;
    util::for_each_line(path, [&](int line_no, const std::string& line) {
        const json j = json::parse(line);
        if (j.contains("tournament_error")) {
            const auto& e = j.at("tournament_error");
            set.errors.push_back({e.at("case_id").get<std::string>(),
                                  e.at("interviewer_backend_id").get<std::string>(),
                                  e.at("message").get<std::string>()});
            return;
        }
        Transcript t;
        t.dialogue.case_id = j.at("case_id").get<std::string>();
        const auto stage = corpus::stage_from_string(j.at("stage").get<std::string>());
        t.dialogue.stage = stage.value_or(corpus::DialogueStage::polished);
        for (const auto& u : j.at("utterances")) {
            corpus::Utterance utt;
            const auto speaker = corpus::speaker_from_string(u.at("speaker").get<std::string>());
            if (!speaker) {
                throw std::runtime_error("transcript line " + std::to_string(line_no) +
                                         ": bad speaker");
            }
            utt.speaker = *speaker;
            utt.text = u.at("text").get<std::string>();
            utt.index = u.at("index").get<int>();
            t.dialogue.utterances.push_back(std::move(utt));
        }
        if (j.contains("provenance")) {
            t.dialogue.provenance.run_id = j["provenance"].value("run_id", "");
            t.dialogue.provenance.backend_id = j["provenance"].value("backend_id", "");
            t.dialogue.provenance.seed = j["provenance"].value("seed", std::uint64_t{0});
        }
        const auto reason = termination_from_string(j.at("terminated_by").get<std::string>());
        if (!reason) {
            throw std::runtime_error("transcript line " + std::to_string(line_no) +
                                     ": bad terminated_by");
        }
        t.terminated_by = *reason;
        t.utterance_backends = j.at("utterance_backends").get<std::vector<std::string>>();
        t.interviewer_backend_id = j.at("interviewer_backend_id").get<std::string>();
        t.patient_backend_id = j.at("patient_backend_id").get<std::string>();
        t.end_marker_seen = j.value("end_marker_seen", false);
        t.error = j.value("error", "");
        set.transcripts.push_back(std::move(t));
    });
    return set;
}

}  // namespace clinsynth::simulate
