#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace clinsynth::corpus {

enum class CoarseLabel { depressive, anxiety, other_disorder, healthy };

inline constexpr CoarseLabel kCoarseLabels[] = {CoarseLabel::depressive, CoarseLabel::anxiety,
                                                CoarseLabel::other_disorder, CoarseLabel::healthy};

std::string_view to_string(CoarseLabel label);

/// Canonical serialized form only ("depressive", "anxiety", "other_disorder",
/// "healthy").
std::optional<CoarseLabel> coarse_from_string(std::string_view s);

/// Lenient lookup over a small alias table ("depression", "healthy control",
/// "anx", ...), normalized case/punctuation-insensitively.
std::optional<CoarseLabel> coarse_from_alias(std::string_view s);

/// Diagnosis-name phrases for a coarse class, used by leak detection. Only
/// explicit disorder phrasings; bare symptom words never match.
std::vector<std::string> coarse_surface_forms(CoarseLabel label);

struct FineLabelInfo {
    std::string id;  // canonical, snake_case
    CoarseLabel coarse = CoarseLabel::other_disorder;
    std::vector<std::string> aliases;
};

/// Closed registry of fine-grained disorder identifiers with an alias table.
/// Lookup is case-insensitive and punctuation-tolerant; the canonical id is
/// always one of its own aliases, so normalization is idempotent.
class LabelRegistry {
public:
    /// DSM-5 disorder names used throughout the corpus, with common aliases.
    static LabelRegistry builtin();

    /// Extends the registry from a JSON file:
    ///   [{"id": "...", "coarse": "...", "aliases": ["...", ...]}, ...]
    /// Existing entries are merged (alias union).
    void load_alias_file(const std::filesystem::path& path);

    void add(FineLabelInfo info);

    bool is_known_fine(std::string_view id) const;

    /// Canonical id for any surface form, or nullopt.
    std::optional<std::string> normalize_fine(std::string_view surface) const;

    const FineLabelInfo* find(std::string_view id) const;

    /// Canonical id (spelled with spaces) plus all aliases.
    std::vector<std::string> surface_forms(const std::string& fine_id) const;

    struct ScanMatch {
        CoarseLabel coarse;
        std::optional<std::string> fine;
    };

    /// First coarse-alias or fine-surface-form hit inside free text (leftmost
    /// match wins; longer match wins at the same position).
    std::optional<ScanMatch> scan_first_match(std::string_view text) const;

    const std::vector<FineLabelInfo>& entries() const { return entries_; }

private:
    std::vector<FineLabelInfo> entries_;
    std::map<std::string, std::size_t> by_normalized_alias_;
    std::map<std::string, std::size_t> by_id_;
};

}  // namespace clinsynth::corpus
