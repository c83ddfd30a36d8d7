#pragma once

#include "clinsynth/simulate/session.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace clinsynth::simulate {

struct TournamentError {
    std::string case_id;
    std::string interviewer_backend_id;
    std::string message;
};

struct TranscriptSet {
    std::vector<Transcript> transcripts;  // profile-major, interviewer-minor order
    std::vector<TournamentError> errors;

    /// Groups transcripts by case id so the judge can form same-client pairs.
    std::map<std::string, std::vector<const Transcript*>> by_profile() const;
};

/// Every (profile, interviewer) pair runs one session against the shared
/// patient backend. Per-pair failures are recorded and the tournament
/// continues. Requires at least one profile and two interviewers.
TranscriptSet run_tournament(const std::vector<PatientProfile>& profiles,
                             const std::vector<std::string>& interviewer_backend_ids,
                             backend::Gateway& gateway, const SessionConfig& base_config,
                             const SimTemplates& templates);

void save_transcripts(const std::filesystem::path& path, const TranscriptSet& transcripts);
TranscriptSet load_transcripts(const std::filesystem::path& path);

std::string transcript_to_json_line(const Transcript& t);

}  // namespace clinsynth::simulate
