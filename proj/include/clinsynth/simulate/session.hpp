#pragma once

#include "clinsynth/backend/gateway.hpp"
#include "clinsynth/corpus/types.hpp"
#include "clinsynth/synthgen/template.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace clinsynth::simulate {

/// Everything the patient simulator may see about the case. Truth labels are
/// kept for downstream evaluation but never rendered into any prompt;
/// profile_from_record additionally scrubs diagnosis surface forms out of
/// the section texts.
struct PatientProfile {
    std::string case_id;
    std::string persona;
    corpus::CaseRecord record;
    corpus::CoarseLabel truth_coarse = corpus::CoarseLabel::healthy;
    std::optional<std::string> truth_fine;
};

PatientProfile profile_from_record(const corpus::CaseRecord& record,
                                   const corpus::CaseDescription& case_description,
                                   const corpus::LabelRegistry& registry);

struct SessionConfig {
    int max_rounds = 8;
    std::string end_marker = "[END_OF_INTERVIEW]";
    std::string interviewer_backend_id;
    std::string patient_backend_id;
    std::uint64_t seed = 0;
};

enum class TerminationReason { end_marker, round_budget, error };

std::string_view to_string(TerminationReason reason);
std::optional<TerminationReason> termination_from_string(std::string_view s);

struct Transcript {
    corpus::Dialogue dialogue;
    TerminationReason terminated_by = TerminationReason::round_budget;
    std::vector<std::string> utterance_backends;  // parallel to utterances
    std::string interviewer_backend_id;
    std::string patient_backend_id;
    bool end_marker_seen = false;  // marker is stripped from stored text
    std::string error;             // set when terminated_by == error
};

struct SimTemplates {
    synthgen::PromptTemplate interviewer_system;
    synthgen::PromptTemplate patient_system;

    static SimTemplates load(const std::filesystem::path& dir);
};

/// One live session: alternating interviewer/patient turns through the
/// gateway, up to max_rounds (one round = one psychiatrist turn plus one
/// client turn). Stops early when the interviewer emits the end marker. A
/// backend failure mid-session yields terminated_by == error with the
/// partial transcript.
Transcript run_interview(const PatientProfile& profile, backend::Gateway& gateway,
                         const SessionConfig& config, const SimTemplates& templates);

}  // namespace clinsynth::simulate
