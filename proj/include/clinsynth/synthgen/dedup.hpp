#pragma once

#include "clinsynth/corpus/types.hpp"

namespace clinsynth::synthgen {

/// Removes any utterance whose normalized text (lowercase, punctuation
/// stripped, whitespace collapsed) repeats an earlier kept utterance by the
/// same speaker. The following reply is removed with it when dropping the
/// duplicate alone would break alternation. Indices are renumbered.
/// Idempotent: dedup(dedup(d)) == dedup(d).
corpus::Dialogue dedup_utterances(const corpus::Dialogue& dialogue);

}  // namespace clinsynth::synthgen
