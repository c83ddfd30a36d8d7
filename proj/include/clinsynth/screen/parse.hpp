#pragma once

#include "clinsynth/corpus/labels.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace clinsynth::screen {

enum class ParseStatus { clean, repaired, fallback_unknown };

std::string_view to_string(ParseStatus status);
std::optional<ParseStatus> parse_status_from_string(std::string_view s);

struct ScreeningOutput {
    /// Empty exactly when parse_status == fallback_unknown; such outputs are
    /// scored as incorrect for every task.
    std::optional<corpus::CoarseLabel> coarse;
    std::optional<std::string> fine;
    std::string explanation;
    ParseStatus parse_status = ParseStatus::clean;

    bool operator==(const ScreeningOutput&) const = default;
};

/// Total and deterministic: extracts RESULT:/FINE:/EXPLANATION: tagged
/// lines, normalizing labels through the registry (case-insensitive,
/// punctuation-tolerant). Without tags, a lenient scan for the first
/// registry match in the final 5 lines yields a `repaired` parse; failing
/// that the output is recorded as fallback_unknown. Never throws.
ScreeningOutput parse_screen_output(std::string_view text,
                                    const corpus::LabelRegistry& registry);

/// Renders an output in the same tagged-line contract the prompt demands,
/// so parse(format(x)) == x for clean outputs.
std::string format_screen_output(const ScreeningOutput& output);

/// Serialized coarse value: canonical label string, or "unknown".
std::string coarse_or_unknown(const ScreeningOutput& output);

}  // namespace clinsynth::screen
