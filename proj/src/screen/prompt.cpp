#include "clinsynth/screen/prompt.hpp"

#include "clinsynth/synthgen/stages.hpp"
#include "clinsynth/util/jsonl.hpp"

namespace clinsynth::screen {

namespace {

constexpr std::size_t kExemplarUtteranceCap = 12;

corpus::Dialogue truncated(const corpus::Dialogue& dialogue) {
    if (dialogue.utterances.size() <= kExemplarUtteranceCap) {
        return dialogue;
    }
    corpus::Dialogue copy = dialogue;
    copy.utterances.resize(kExemplarUtteranceCap);
    return copy;
}

}  // namespace

ScreenTemplates ScreenTemplates::load(const std::filesystem::path& dir) {
    return ScreenTemplates{
        synthgen::PromptTemplate::load(dir / "screen_system.txt"),
        synthgen::PromptTemplate::load(dir / "screen_user.txt"),
        util::read_file(dir / "cot_guideline.txt"),
    };
}

std::vector<backend::ChatMessage> build_screen_prompt(const corpus::Dialogue& dialogue,
                                                      const PromptStrategy& strategy,
                                                      const ScreenTemplates& templates) {
    strategy.validate();

    std::string system_text = templates.system_contract.render({});
    if (uses_cot(strategy.kind)) {
        const std::string& guideline =
            strategy.cot_guideline.empty() ? templates.cot_guideline : strategy.cot_guideline;
        system_text += "\n\nScreening guideline:\n" + guideline +
                       "\nWork through the guideline step by step in your answer before the "
                       "tagged lines.";
    }

    std::vector<backend::ChatMessage> messages;
    messages.push_back(backend::system_msg(system_text));

    if (uses_fewshot(strategy.kind)) {
        for (const auto& exemplar : strategy.exemplars) {
            const std::string block =
                synthgen::render_dialogue_block(truncated(exemplar.dialogue));
            messages.push_back(backend::user_msg(
                templates.user_dialogue.render({{"dialogue_block", block}})));
            messages.push_back(backend::assistant_msg(format_screen_output(exemplar.output)));
        }
    }

    messages.push_back(backend::user_msg(templates.user_dialogue.render(
        {{"dialogue_block", synthgen::render_dialogue_block(dialogue)}})));
    return messages;
}

}  // namespace clinsynth::screen
