#pragma once

#include "clinsynth/corpus/types.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace clinsynth::corpus {

struct SplitResult {
    CaseSet train;
    CaseSet test;
    /// One entry per stratum that could not appear in both splits
    /// (fewer than 2 members).
    std::vector<std::string> warnings;
};

/// Stratified split by coarse label using largest-remainder seat allocation,
/// so per-stratum train counts track train_fraction as closely as integer
/// counts allow. Same seed gives an identical split; train and test
/// partition the input. Singleton strata are reported and get priority for a
/// train seat. Throws std::invalid_argument when the fraction is outside
/// (0,1) or the input is too small to leave both splits non-empty.
SplitResult split_dataset(const CaseSet& cases, double train_fraction, std::uint64_t seed);

}  // namespace clinsynth::corpus
