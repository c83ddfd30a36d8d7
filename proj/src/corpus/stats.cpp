#include "clinsynth/corpus/stats.hpp"

#include "clinsynth/util/text.hpp"

#include <stdexcept>

namespace clinsynth::corpus {

CorpusStats corpus_stats(const DialogueSet& dialogues, const CaseSet* cases,
                         const Tokenizer& tokenizer) {
    if (dialogues.dialogues.empty()) {
        throw std::invalid_argument("corpus_stats: empty dialogue set");
    }
    CorpusStats stats;
    stats.n_dialogues = dialogues.dialogues.size();

    std::size_t total_utterances = 0;
    std::size_t total_words = 0;
    std::size_t total_tokens = 0;
    for (const auto& d : dialogues.dialogues) {
        total_utterances += d.utterances.size();
        for (const auto& u : d.utterances) {
            total_words += util::word_count(u.text);
            total_tokens += tokenizer ? tokenizer(u.text).size() : util::word_count(u.text);
        }
        if (cases != nullptr) {
            const CaseDescription* c = cases->find(d.case_id);
            if (c != nullptr) {
                stats.coarse_histogram[std::string(to_string(c->truth_coarse))] += 1;
                if (c->truth_fine) {
                    stats.fine_histogram[*c->truth_fine] += 1;
                }
            }
        }
    }
    stats.avg_utterances_per_dialogue =
        static_cast<double>(total_utterances) / static_cast<double>(stats.n_dialogues);
    if (total_utterances > 0) {
        stats.avg_words_per_utterance =
            static_cast<double>(total_words) / static_cast<double>(total_utterances);
        stats.avg_tokens_per_utterance =
            static_cast<double>(total_tokens) / static_cast<double>(total_utterances);
    }
    return stats;
}

}  // namespace clinsynth::corpus
