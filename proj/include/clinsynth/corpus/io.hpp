#pragma once

#include "clinsynth/corpus/types.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace clinsynth::corpus {

struct RejectedLine {
    int line_no = 0;
    std::string reason;
    std::string line;
};

struct LoadOptions {
    /// Write "<input>.rejects.jsonl" next to the input when any line fails
    /// validation.
    bool write_rejects_file = true;
};

struct CaseLoadResult {
    CaseSet cases;
    std::vector<RejectedLine> rejects;
};

struct DialogueLoadResult {
    DialogueSet dialogues;
    std::vector<RejectedLine> rejects;
};

/// One JSON object per line, snake_case keys matching the type fields.
/// Records failing validation land in the rejects report (with line number
/// and reason), never silently dropped. Throws std::runtime_error on IO
/// failure.
CaseLoadResult load_cases(const std::filesystem::path& path, const LabelRegistry& registry,
                          const LoadOptions& options = {});

DialogueLoadResult load_dialogues(const std::filesystem::path& path,
                                  const LoadOptions& options = {});

void save_cases(const std::filesystem::path& path, const CaseSet& cases);
void save_dialogues(const std::filesystem::path& path, const DialogueSet& dialogues);

std::string case_to_json_line(const CaseDescription& c);
std::string dialogue_to_json_line(const Dialogue& d);
std::string record_to_json_line(const CaseRecord& r);

struct RecordLoadResult {
    std::vector<CaseRecord> records;
    std::vector<RejectedLine> rejects;
};

RecordLoadResult load_records(const std::filesystem::path& path, const LoadOptions& options = {});

void write_rejects_file(const std::filesystem::path& input_path,
                        const std::vector<RejectedLine>& rejects);

}  // namespace clinsynth::corpus
