#pragma once

#include "clinsynth/corpus/labels.hpp"
#include "clinsynth/corpus/types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace clinsynth::synthgen {

struct LeakHit {
    int utterance_index = 0;
    std::string matched_term;
    std::string label_term;  // the diagnosis identifier the term reveals
};

struct LeakReport {
    std::string dialogue_id;
    std::vector<LeakHit> hits;

    bool clean() const { return hits.empty(); }
};

/// Flags utterances that state the case's own diagnosis by name: the fine
/// label's registry surface forms plus the coarse class's explicit disorder
/// phrases. Symptom descriptions never match; neither do other disorders'
/// names.
LeakReport detect_leak(const corpus::Dialogue& dialogue, corpus::CoarseLabel truth_coarse,
                       const std::optional<std::string>& truth_fine,
                       const corpus::LabelRegistry& registry);

/// All phrases detect_leak would flag for this label pair.
std::vector<std::string> leak_terms(corpus::CoarseLabel truth_coarse,
                                    const std::optional<std::string>& truth_fine,
                                    const corpus::LabelRegistry& registry);

}  // namespace clinsynth::synthgen
