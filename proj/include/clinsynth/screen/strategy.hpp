#pragma once

#include "clinsynth/corpus/types.hpp"
#include "clinsynth/screen/parse.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace clinsynth::screen {

enum class StrategyKind { zero_shot, few_shot, cot, few_shot_cot };

std::string_view to_string(StrategyKind kind);
std::optional<StrategyKind> strategy_from_string(std::string_view s);

inline bool uses_fewshot(StrategyKind kind) {
    return kind == StrategyKind::few_shot || kind == StrategyKind::few_shot_cot;
}
inline bool uses_cot(StrategyKind kind) {
    return kind == StrategyKind::cot || kind == StrategyKind::few_shot_cot;
}

/// A training case paired with its dialogue, the unit few-shot exemplars are
/// drawn from.
struct LabeledDialogue {
    corpus::Dialogue dialogue;
    corpus::CoarseLabel coarse = corpus::CoarseLabel::healthy;
    std::optional<std::string> fine;
    std::string explanation;
};

struct Exemplar {
    corpus::Dialogue dialogue;
    ScreeningOutput output;
};

struct PromptStrategy {
    StrategyKind kind = StrategyKind::zero_shot;
    std::vector<Exemplar> exemplars;  // few-shot kinds: exactly 4, one per coarse label
    std::string cot_guideline;        // CoT kinds

    /// Throws std::invalid_argument on violated invariants.
    void validate() const;
};

/// Uniformly selects one exemplar per coarse label (4 total) from the
/// training pool; same seed, same selection. Throws when a coarse class has
/// no representative.
std::vector<Exemplar> select_fewshot(const std::vector<LabeledDialogue>& train,
                                     std::uint64_t seed);

}  // namespace clinsynth::screen
