#include "clinsynth/synthgen/dedup.hpp"

#include "clinsynth/util/text.hpp"

#include <set>

namespace clinsynth::synthgen {

corpus::Dialogue dedup_utterances(const corpus::Dialogue& dialogue) {
    corpus::Dialogue out = dialogue;
    out.utterances.clear();

    std::set<std::string> seen_psychiatrist;
    std::set<std::string> seen_client;
    const auto& utts = dialogue.utterances;
    for (std::size_t i = 0; i < utts.size(); ++i) {
        auto& seen =
            utts[i].speaker == corpus::Speaker::psychiatrist ? seen_psychiatrist : seen_client;
        const std::string norm = util::normalize_for_match(utts[i].text);
        if (seen.count(norm) > 0) {
            // Drop the duplicate; drop its reply too unless it is the final
            // utterance (removing a trailing utterance keeps alternation).
            if (i + 1 < utts.size()) {
                ++i;
            }
            continue;
        }
        seen.insert(norm);
        out.utterances.push_back(utts[i]);
    }
    for (std::size_t i = 0; i < out.utterances.size(); ++i) {
        out.utterances[i].index = static_cast<int>(i);
    }
    return out;
}

}  // namespace clinsynth::synthgen
