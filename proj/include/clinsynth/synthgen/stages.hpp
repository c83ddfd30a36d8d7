#pragma once

#include "clinsynth/backend/gateway.hpp"
#include "clinsynth/corpus/types.hpp"
#include "clinsynth/synthgen/leak.hpp"
#include "clinsynth/synthgen/redact.hpp"
#include "clinsynth/synthgen/template.hpp"

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

namespace clinsynth::synthgen {

/// A stage gave unusable model output even after one repair attempt. Carries
/// the raw model text for audit.
class StageError : public std::runtime_error {
public:
    StageError(const std::string& message, std::string raw_output)
        : std::runtime_error(message), raw_output_(std::move(raw_output)) {}

    const std::string& raw_output() const { return raw_output_; }

private:
    std::string raw_output_;
};

/// The prompt files a pipeline run needs, loaded from one directory by
/// fixed names (extract_record.txt, repair_record.txt, raw_interview.txt,
/// repair_interview.txt, polish.txt, leak_rewrite.txt).
struct SynthgenTemplates {
    PromptTemplate extract_record;
    PromptTemplate repair_record;
    PromptTemplate raw_interview;
    PromptTemplate repair_interview;
    PromptTemplate polish;
    PromptTemplate leak_rewrite;

    static SynthgenTemplates load(const std::filesystem::path& dir);
};

struct ExtractOutcome {
    corpus::CaseRecord record;
    bool repaired = false;
};

/// Stage b: structure a case description into the seven screening sections.
/// A section the narrative does not cover comes back as "not reported" and
/// is flagged absent in completeness. One repair round on schema violation,
/// then StageError.
ExtractOutcome extract_record(const corpus::CaseDescription& case_description,
                              backend::Gateway& gateway, const std::string& backend_id,
                              const SynthgenTemplates& templates);

struct InterviewOutcome {
    corpus::Dialogue dialogue;  // stage == raw
    bool repaired = false;
};

/// Stage c: turn a record into a raw interview of `rounds` psychiatrist/
/// client exchanges following the screening topic flow. Output is parsed
/// from the strict "PSYCHIATRIST: / CLIENT:" line protocol; one repair round
/// on protocol violation, then StageError. Requires rounds >= 4.
InterviewOutcome generate_raw_interview(const corpus::CaseRecord& record,
                                        backend::Gateway& gateway, const std::string& backend_id,
                                        const SynthgenTemplates& templates, int rounds,
                                        const corpus::Provenance& provenance);

struct PolishOutcome {
    std::optional<corpus::Dialogue> polished;  // set unless quarantined
    LeakReport leak;                           // final leak state
    bool quarantined = false;
    bool repaired = false;  // any targeted rewrite was needed
    std::size_t redactions = 0;
};

/// Stage d: backend polish pass, then rule-based redaction, dedup, and leak
/// detection. Utterances still naming the case's diagnosis are rewritten via
/// the backend, at most 2 iterations; a persistent leak quarantines the
/// dialogue together with its report.
PolishOutcome polish_dialogue(const corpus::Dialogue& raw, corpus::CoarseLabel truth_coarse,
                              const std::optional<std::string>& truth_fine,
                              backend::Gateway& gateway, const std::string& backend_id,
                              const SynthgenTemplates& templates,
                              const std::vector<RedactionRule>& rules,
                              const corpus::LabelRegistry& registry);

/// Renders a dialogue in the line protocol used by prompts.
std::string render_dialogue_block(const corpus::Dialogue& dialogue);

/// Renders the seven sections as "TAG: value" lines.
std::string render_sections_block(const corpus::CaseRecord& record);

/// Parses "PSYCHIATRIST:/CLIENT:" line-protocol text into utterances.
/// Returns problems instead of throwing so stages can decide on repair.
struct ProtocolParse {
    std::vector<corpus::Utterance> utterances;
    std::vector<std::string> problems;
};
ProtocolParse parse_line_protocol(const std::string& text);

}  // namespace clinsynth::synthgen
