#include "clinsynth/synthgen/leak.hpp"

#include "clinsynth/util/text.hpp"

namespace clinsynth::synthgen {

std::vector<std::string> leak_terms(corpus::CoarseLabel truth_coarse,
                                    const std::optional<std::string>& truth_fine,
                                    const corpus::LabelRegistry& registry) {
    std::vector<std::string> terms = corpus::coarse_surface_forms(truth_coarse);
    if (truth_fine) {
        for (auto& form : registry.surface_forms(*truth_fine)) {
            terms.push_back(std::move(form));
        }
    }
    return terms;
}

LeakReport detect_leak(const corpus::Dialogue& dialogue, corpus::CoarseLabel truth_coarse,
                       const std::optional<std::string>& truth_fine,
                       const corpus::LabelRegistry& registry) {
    LeakReport report;
    report.dialogue_id = dialogue.case_id;
    const auto terms = leak_terms(truth_coarse, truth_fine, registry);
    for (const auto& utterance : dialogue.utterances) {
        for (const auto& term : terms) {
            if (util::contains_phrase(utterance.text, term)) {
                report.hits.push_back({utterance.index, term,
                                       truth_fine ? *truth_fine
                                                  : std::string(to_string(truth_coarse))});
                break;  // one hit per utterance is enough to trigger a rewrite
            }
        }
    }
    return report;
}

}  // namespace clinsynth::synthgen
