#include "clinsynth/screen/strategy.hpp"

#include "clinsynth/util/hash.hpp"

#include <random>
#include <stdexcept>

namespace clinsynth::screen {

std::string_view to_string(StrategyKind kind) {
    switch (kind) {
        case StrategyKind::zero_shot:
            return "zero_shot";
        case StrategyKind::few_shot:
            return "few_shot";
        case StrategyKind::cot:
            return "cot";
        case StrategyKind::few_shot_cot:
            return "few_shot_cot";
    }
    return "unknown";
}

std::optional<StrategyKind> strategy_from_string(std::string_view s) {
    for (const StrategyKind kind : {StrategyKind::zero_shot, StrategyKind::few_shot,
                                    StrategyKind::cot, StrategyKind::few_shot_cot}) {
        if (s == to_string(kind)) {
            return kind;
        }
    }
    return std::nullopt;
}

void PromptStrategy::validate() const {
    if (uses_fewshot(kind)) {
        if (exemplars.size() != 4) {
            throw std::invalid_argument("few-shot strategy requires exactly 4 exemplars");
        }
        bool seen[4] = {false, false, false, false};
        for (const auto& e : exemplars) {
            if (!e.output.coarse) {
                throw std::invalid_argument("few-shot exemplar without a coarse label");
            }
            bool& slot = seen[static_cast<std::size_t>(*e.output.coarse)];
            if (slot) {
                throw std::invalid_argument("few-shot exemplars must cover one case per coarse "
                                            "label");
            }
            slot = true;
        }
    } else if (!exemplars.empty()) {
        throw std::invalid_argument("exemplars only apply to few-shot strategies");
    }
    if (uses_cot(kind) && cot_guideline.empty()) {
        throw std::invalid_argument("CoT strategy requires a guideline");
    }
}

std::vector<Exemplar> select_fewshot(const std::vector<LabeledDialogue>& train,
                                     std::uint64_t seed) {
    std::vector<Exemplar> exemplars;
    for (const corpus::CoarseLabel label : corpus::kCoarseLabels) {
        std::vector<const LabeledDialogue*> stratum;
        for (const auto& item : train) {
            if (item.coarse == label) {
                stratum.push_back(&item);
            }
        }
        if (stratum.empty()) {
            throw std::invalid_argument(
                std::string("select_fewshot: no training case with coarse label '") +
                std::string(to_string(label)) + "'");
        }
        std::mt19937_64 rng(util::derive_subseed(
            seed, std::string("fewshot:") + std::string(to_string(label))));
        std::uniform_int_distribution<std::size_t> pick(0, stratum.size() - 1);
        const LabeledDialogue& chosen = *stratum[pick(rng)];

        Exemplar e;
        e.dialogue = chosen.dialogue;
        e.output.coarse = chosen.coarse;
        e.output.fine = chosen.fine;
        e.output.explanation = chosen.explanation.empty()
                                   ? "Screening outcome assigned in the training corpus."
                                   : chosen.explanation;
        e.output.parse_status = ParseStatus::clean;
        exemplars.push_back(std::move(e));
    }
    return exemplars;
}

}  // namespace clinsynth::screen
