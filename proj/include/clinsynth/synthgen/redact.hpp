#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace clinsynth::synthgen {

enum class RedactionKind { lexicon, pattern };

/// Replacement tokens come from a closed set so redacted text is
/// recognizable and never re-matches.
inline constexpr std::string_view kRedactionPlaceholders[] = {"[NAME]", "[LOCATION]", "[ORG]",
                                                              "[DATE]"};

struct RedactionRule {
    RedactionKind kind = RedactionKind::lexicon;
    std::vector<std::string> terms;  // lexicon: matched case-insensitively on word boundaries
    std::string pattern;             // pattern: ECMAScript regex
    std::string replacement;

    void validate() const;
};

/// JSON array: [{"kind": "lexicon", "terms": [...], "replacement": "[NAME]"},
///              {"kind": "pattern", "pattern": "...", "replacement": "[DATE]"}]
std::vector<RedactionRule> load_redaction_rules(const std::filesystem::path& path);

struct RedactionResult {
    std::string text;
    std::size_t replacements = 0;
};

/// Deterministic left-to-right, longest-match-first replacement. Existing
/// placeholder tokens are skipped, making the operation idempotent.
RedactionResult redact_pii(std::string_view text, const std::vector<RedactionRule>& rules);

}  // namespace clinsynth::synthgen
