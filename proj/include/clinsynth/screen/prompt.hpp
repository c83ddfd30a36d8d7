#pragma once

#include "clinsynth/backend/message.hpp"
#include "clinsynth/corpus/types.hpp"
#include "clinsynth/screen/strategy.hpp"
#include "clinsynth/synthgen/template.hpp"

#include <filesystem>
#include <vector>

namespace clinsynth::screen {

struct ScreenTemplates {
    synthgen::PromptTemplate system_contract;  // fixes the RESULT/FINE/EXPLANATION lines
    synthgen::PromptTemplate user_dialogue;    // wraps the dialogue to screen
    std::string cot_guideline;                 // default guideline text

    static ScreenTemplates load(const std::filesystem::path& dir);
};

/// Builds the message list for one screening call. zero_shot gives exactly
/// [system, user]; few-shot kinds interleave the 4 exemplar dialogue/output
/// pairs as user/assistant turns; CoT kinds prepend the guideline and a
/// step-by-step instruction to the system message. Exemplar dialogues longer
/// than 12 utterances are truncated to the first 12.
std::vector<backend::ChatMessage> build_screen_prompt(const corpus::Dialogue& dialogue,
                                                      const PromptStrategy& strategy,
                                                      const ScreenTemplates& templates);

}  // namespace clinsynth::screen
