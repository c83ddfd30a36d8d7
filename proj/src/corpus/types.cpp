#include "clinsynth/corpus/types.hpp"

#include "clinsynth/util/text.hpp"

#include <set>
#include <stdexcept>

namespace clinsynth::corpus {

std::string_view to_string(SourceKind kind) {
    switch (kind) {
        case SourceKind::casebook:
            return "casebook";
        case SourceKind::clinical_note:
            return "clinical_note";
        case SourceKind::literature:
            return "literature";
        case SourceKind::persona_conversation:
            return "persona_conversation";
    }
    return "unknown";
}

std::optional<SourceKind> source_kind_from_string(std::string_view s) {
    for (const SourceKind kind : {SourceKind::casebook, SourceKind::clinical_note,
                                  SourceKind::literature, SourceKind::persona_conversation}) {
        if (s == to_string(kind)) {
            return kind;
        }
    }
    return std::nullopt;
}

const CaseDescription* CaseSet::find(std::string_view id) const {
    for (const auto& c : cases) {
        if (c.id == id) {
            return &c;
        }
    }
    return nullptr;
}

std::optional<std::size_t> CaseRecord::section_index(std::string_view name) {
    for (std::size_t i = 0; i < kRecordSections.size(); ++i) {
        if (kRecordSections[i] == name) {
            return i;
        }
    }
    return std::nullopt;
}

const std::string& CaseRecord::section(std::string_view name) const {
    const auto i = section_index(name);
    if (!i) {
        throw std::invalid_argument("unknown record section: " + std::string(name));
    }
    return sections[*i];
}

void CaseRecord::set_section(std::string_view name, std::string value) {
    const auto i = section_index(name);
    if (!i) {
        throw std::invalid_argument("unknown record section: " + std::string(name));
    }
    sections[*i] = std::move(value);
    present[*i] = util::normalize_for_match(sections[*i]) != util::normalize_for_match(kNotReported) &&
                  !sections[*i].empty();
}

std::string_view to_string(Speaker s) {
    return s == Speaker::psychiatrist ? "psychiatrist" : "client";
}

std::optional<Speaker> speaker_from_string(std::string_view s) {
    if (s == "psychiatrist") {
        return Speaker::psychiatrist;
    }
    if (s == "client") {
        return Speaker::client;
    }
    return std::nullopt;
}

std::string_view to_string(DialogueStage s) {
    return s == DialogueStage::raw ? "raw" : "polished";
}

std::optional<DialogueStage> stage_from_string(std::string_view s) {
    if (s == "raw") {
        return DialogueStage::raw;
    }
    if (s == "polished") {
        return DialogueStage::polished;
    }
    return std::nullopt;
}

std::vector<std::string> validate_dialogue(const Dialogue& dialogue) {
    std::vector<std::string> problems;
    if (dialogue.case_id.empty()) {
        problems.push_back("empty case_id");
    }
    if (dialogue.utterances.empty()) {
        problems.push_back("no utterances");
        return problems;
    }
    if (dialogue.utterances.front().speaker != Speaker::psychiatrist) {
        problems.push_back("dialogue must open with the psychiatrist");
    }
    std::set<std::string> seen_psy;
    std::set<std::string> seen_cli;
    for (std::size_t i = 0; i < dialogue.utterances.size(); ++i) {
        const Utterance& u = dialogue.utterances[i];
        if (u.index != static_cast<int>(i)) {
            problems.push_back("utterance " + std::to_string(i) + ": index not consecutive");
        }
        if (util::trim(u.text).empty()) {
            problems.push_back("utterance " + std::to_string(i) + ": empty text");
        }
        if (i > 0 && u.speaker == dialogue.utterances[i - 1].speaker) {
            problems.push_back("utterance " + std::to_string(i) + ": speakers do not alternate");
        }
        if (dialogue.stage == DialogueStage::polished) {
            auto& seen = u.speaker == Speaker::psychiatrist ? seen_psy : seen_cli;
            const std::string norm = util::normalize_for_match(u.text);
            if (!seen.insert(norm).second) {
                problems.push_back("utterance " + std::to_string(i) +
                                   ": duplicate content for speaker in polished dialogue");
            }
        }
    }
    return problems;
}

}  // namespace clinsynth::corpus
