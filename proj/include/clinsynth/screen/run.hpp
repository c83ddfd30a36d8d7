#pragma once

#include "clinsynth/backend/gateway.hpp"
#include "clinsynth/screen/prompt.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace clinsynth::screen {

struct RunResults {
    std::string backend_id;
    StrategyKind strategy = StrategyKind::zero_shot;
    int repeats = 3;
    /// One map per repeat; every repeat covers the identical case-id set.
    std::vector<std::map<std::string, ScreeningOutput>> repeat_maps;
};

/// repeats x |dialogues| completions. Cases run concurrently within a
/// repeat (bounded by the backend's max_in_flight); repeats run sequentially
/// so record logs stay ordered. A per-case backend error is recorded as a
/// fallback_unknown output rather than aborting the run.
RunResults run_screening(const std::vector<corpus::Dialogue>& dialogues,
                         backend::Gateway& gateway, const std::string& backend_id,
                         const PromptStrategy& strategy, const ScreenTemplates& templates,
                         const corpus::LabelRegistry& registry, int repeats = 3);

/// JSONL: a meta line followed by one line per (repeat, case).
void save_run_results(const std::filesystem::path& path, const RunResults& results);
RunResults load_run_results(const std::filesystem::path& path);

}  // namespace clinsynth::screen
