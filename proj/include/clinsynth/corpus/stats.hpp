#pragma once

#include "clinsynth/corpus/types.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace clinsynth::corpus {

struct CorpusStats {
    std::size_t n_dialogues = 0;
    std::map<std::string, std::size_t> coarse_histogram;
    std::map<std::string, std::size_t> fine_histogram;
    double avg_utterances_per_dialogue = 0.0;
    double avg_words_per_utterance = 0.0;
    double avg_tokens_per_utterance = 0.0;
};

/// Token = whitespace-split unit unless a tokenizer is configured.
using Tokenizer = std::function<std::vector<std::string>(std::string_view)>;

/// Aggregates dialogue/utterance counts and lengths. Label histograms are
/// filled when `cases` is provided (dialogues carry no labels themselves).
/// Throws std::invalid_argument on an empty set.
CorpusStats corpus_stats(const DialogueSet& dialogues, const CaseSet* cases = nullptr,
                         const Tokenizer& tokenizer = {});

}  // namespace clinsynth::corpus
