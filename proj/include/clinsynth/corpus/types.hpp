#pragma once

#include "clinsynth/corpus/labels.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace clinsynth::corpus {

enum class SourceKind { casebook, clinical_note, literature, persona_conversation };

std::string_view to_string(SourceKind kind);
std::optional<SourceKind> source_kind_from_string(std::string_view s);

struct CaseDescription {
    std::string id;
    SourceKind source_kind = SourceKind::casebook;
    std::string text;
    CoarseLabel truth_coarse = CoarseLabel::healthy;
    std::optional<std::string> truth_fine;
    std::optional<std::string> truth_explanation;

    bool operator==(const CaseDescription&) const = default;
};

struct CaseSet {
    std::vector<CaseDescription> cases;

    const CaseDescription* find(std::string_view id) const;
    bool operator==(const CaseSet&) const = default;
};

/// The seven screening-template sections, in interview topic order.
inline constexpr std::array<std::string_view, 7> kRecordSections = {
    "identification",
    "chief_complaint",
    "history_of_present_illness",
    "medical_history",
    "drug_alcohol_history",
    "family_history_of_mental_disorder",
    "personal_social_history",
};

inline constexpr std::string_view kNotReported = "not reported";

struct CaseRecord {
    std::string case_id;
    std::array<std::string, kRecordSections.size()> sections{};
    std::array<bool, kRecordSections.size()> present{};

    static std::optional<std::size_t> section_index(std::string_view name);

    const std::string& section(std::string_view name) const;
    void set_section(std::string_view name, std::string value);

    bool operator==(const CaseRecord&) const = default;
};

enum class Speaker { psychiatrist, client };

std::string_view to_string(Speaker s);
std::optional<Speaker> speaker_from_string(std::string_view s);

struct Utterance {
    Speaker speaker = Speaker::psychiatrist;
    std::string text;
    int index = 0;

    bool operator==(const Utterance&) const = default;
};

enum class DialogueStage { raw, polished };

std::string_view to_string(DialogueStage s);
std::optional<DialogueStage> stage_from_string(std::string_view s);

struct Provenance {
    std::string run_id;
    std::string backend_id;
    std::uint64_t seed = 0;

    bool operator==(const Provenance&) const = default;
};

struct Dialogue {
    std::string case_id;
    std::vector<Utterance> utterances;
    DialogueStage stage = DialogueStage::raw;
    Provenance provenance;

    bool operator==(const Dialogue&) const = default;
};

/// Empty result means the dialogue satisfies all invariants: speakers
/// alternate starting with the psychiatrist, texts are non-empty after
/// trimming, indices run 0..n-1, and polished dialogues carry no duplicate
/// normalized utterance by the same speaker.
std::vector<std::string> validate_dialogue(const Dialogue& dialogue);

struct DialogueSet {
    std::vector<Dialogue> dialogues;

    bool operator==(const DialogueSet&) const = default;
};

}  // namespace clinsynth::corpus
