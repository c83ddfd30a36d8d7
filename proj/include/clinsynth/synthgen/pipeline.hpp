#pragma once

#include "clinsynth/synthgen/stages.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace clinsynth::synthgen {

struct PipelineOptions {
    std::string backend_id;
    std::string run_id = "run";
    std::uint64_t seed = 0;
    int rounds = 8;
    std::vector<RedactionRule> redaction_rules;
    /// 0 means "use the backend's max_in_flight".
    int max_concurrent_cases = 0;
};

enum class CaseStatus { succeeded, quarantined, failed };

struct CaseOutcome {
    std::string case_id;
    CaseStatus status = CaseStatus::failed;
    bool repaired = false;
    std::string error;
    std::optional<corpus::CaseRecord> record;
    std::optional<corpus::Dialogue> dialogue;  // polished
    std::optional<LeakReport> leak;            // quarantined cases
};

struct PipelineManifest {
    std::string run_id;
    std::string backend_id;
    std::uint64_t seed = 0;
    int rounds = 0;
    std::size_t n_cases = 0;
    std::size_t succeeded = 0;
    std::size_t repaired = 0;
    std::size_t quarantined = 0;
    std::size_t failed = 0;
};

struct PipelineResult {
    std::vector<CaseOutcome> outcomes;  // input case order
    PipelineManifest manifest;
};

/// Stages b -> c -> d per case, isolated per case: one bad case never aborts
/// the run. Cases process concurrently up to the backend's max_in_flight but
/// outcomes keep input order, so emitted files do not depend on scheduling.
PipelineResult run_pipeline(const corpus::CaseSet& cases, backend::Gateway& gateway,
                            const SynthgenTemplates& templates,
                            const corpus::LabelRegistry& registry,
                            const PipelineOptions& options);

/// Writes dialogues.jsonl, records.jsonl, profiles.jsonl, quarantine.jsonl,
/// and manifest.json under dir. The manifest embeds SHA-256 hashes of the
/// emitted files and no timestamps, so identical runs produce identical
/// trees.
void write_dataset(const std::filesystem::path& dir, const PipelineResult& result,
                   const corpus::CaseSet& cases);

}  // namespace clinsynth::synthgen
