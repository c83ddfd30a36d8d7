#pragma once

#include "clinsynth/simulate/tournament.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace clinsynth::judge {

/// Judge-facing view of two transcripts from the same simulated client.
/// Model identities are replaced by "Psychiatrist A"/"Psychiatrist B"; the
/// original slot order is (target, rival) and `flip` records whether the
/// presented order was swapped. True identities live only in the unmasking
/// map, which is stored separately and never enters a judge prompt.
struct MaskedPair {
    std::string pair_id;
    std::string profile_id;
    std::string transcript_a;  // rendered text as presented
    std::string transcript_b;
    bool flip = false;
};

struct UnmaskEntry {
    std::string pair_id;
    std::string profile_id;
    bool flip = false;
    std::string target_backend_id;
    std::string rival_backend_id;
};

struct PairSet {
    std::vector<MaskedPair> pairs;
    std::vector<UnmaskEntry> unmask;

    const UnmaskEntry& unmask_for(const std::string& pair_id) const;
};

/// One pair per (profile, rival backend); the flip for each pair is a
/// seeded fair coin. Throws when a profile group lacks the target transcript
/// or when masking verification finds a known model name in the rendered
/// text.
PairSet build_pairs(const simulate::TranscriptSet& transcripts,
                    const std::string& target_backend_id, std::uint64_t seed,
                    const std::vector<std::string>& known_model_names = {});

std::string render_masked_transcript(const corpus::Dialogue& dialogue,
                                     std::string_view psychiatrist_label);

void save_pairs(const std::filesystem::path& pairs_path, const PairSet& set);
void save_unmask_map(const std::filesystem::path& unmask_path, const PairSet& set);
PairSet load_pairs(const std::filesystem::path& pairs_path,
                   const std::filesystem::path& unmask_path);

}  // namespace clinsynth::judge
