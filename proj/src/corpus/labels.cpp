#include "clinsynth/corpus/labels.hpp"

#include "clinsynth/util/jsonl.hpp"
#include "clinsynth/util/text.hpp"

#include "json.hpp"

#include <stdexcept>

namespace clinsynth::corpus {

namespace {

const std::map<std::string, CoarseLabel>& coarse_alias_table() {
    static const std::map<std::string, CoarseLabel> table = {
        {"depressive", CoarseLabel::depressive},
        {"depression", CoarseLabel::depressive},
        {"depressive disorder", CoarseLabel::depressive},
        {"depressive disorders", CoarseLabel::depressive},
        {"dep", CoarseLabel::depressive},
        {"anxiety", CoarseLabel::anxiety},
        {"anxiety disorder", CoarseLabel::anxiety},
        {"anxiety disorders", CoarseLabel::anxiety},
        {"anx", CoarseLabel::anxiety},
        {"other disorder", CoarseLabel::other_disorder},
        {"other disorders", CoarseLabel::other_disorder},
        {"other", CoarseLabel::other_disorder},
        {"other mental disorder", CoarseLabel::other_disorder},
        {"other mental disorders", CoarseLabel::other_disorder},
        {"healthy", CoarseLabel::healthy},
        {"healthy control", CoarseLabel::healthy},
        {"no disorder", CoarseLabel::healthy},
        {"none", CoarseLabel::healthy},
        {"normal", CoarseLabel::healthy},
    };
    return table;
}

std::string spell_with_spaces(std::string_view id) {
    return util::replace_all(id, "_", " ");
}

}  // namespace

std::string_view to_string(CoarseLabel label) {
    switch (label) {
        case CoarseLabel::depressive:
            return "depressive";
        case CoarseLabel::anxiety:
            return "anxiety";
        case CoarseLabel::other_disorder:
            return "other_disorder";
        case CoarseLabel::healthy:
            return "healthy";
    }
    return "unknown";
}

std::optional<CoarseLabel> coarse_from_string(std::string_view s) {
    for (const CoarseLabel label : kCoarseLabels) {
        if (s == to_string(label)) {
            return label;
        }
    }
    return std::nullopt;
}

std::optional<CoarseLabel> coarse_from_alias(std::string_view s) {
    const std::string key = util::normalize_for_match(s);
    const auto& table = coarse_alias_table();
    const auto it = table.find(key);
    if (it == table.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::vector<std::string> coarse_surface_forms(CoarseLabel label) {
    switch (label) {
        case CoarseLabel::depressive:
            return {"depressive disorder", "depressive disorders"};
        case CoarseLabel::anxiety:
            return {"anxiety disorder", "anxiety disorders"};
        case CoarseLabel::other_disorder:
        case CoarseLabel::healthy:
            return {};
    }
    return {};
}

LabelRegistry LabelRegistry::builtin() {
    LabelRegistry registry;
    const auto dep = CoarseLabel::depressive;
    const auto anx = CoarseLabel::anxiety;
    const auto other = CoarseLabel::other_disorder;

    registry.add({"major_depressive_disorder", dep, {"mdd", "major depression", "clinical depression"}});
    registry.add({"persistent_depressive_disorder", dep, {"pdd", "dysthymia", "dysthymic disorder"}});
    registry.add({"premenstrual_dysphoric_disorder", dep, {"pmdd"}});
    registry.add({"disruptive_mood_dysregulation_disorder", dep, {"dmdd"}});

    registry.add({"generalized_anxiety_disorder", anx, {"gad", "generalised anxiety disorder"}});
    registry.add({"panic_disorder", anx, {"panic attacks disorder"}});
    registry.add({"social_anxiety_disorder", anx, {"social phobia"}});
    registry.add({"specific_phobia", anx, {}});
    registry.add({"agoraphobia", anx, {}});
    registry.add({"separation_anxiety_disorder", anx, {}});
    registry.add({"selective_mutism", anx, {}});

    registry.add({"schizophrenia", other, {"schizophrenia spectrum disorder"}});
    registry.add({"schizoaffective_disorder", other, {}});
    registry.add({"bipolar_i_disorder", other, {"bipolar 1 disorder", "bipolar disorder type i"}});
    registry.add({"bipolar_ii_disorder", other, {"bipolar 2 disorder", "bipolar disorder type ii"}});
    registry.add({"obsessive_compulsive_disorder", other, {"ocd"}});
    registry.add({"posttraumatic_stress_disorder", other, {"ptsd", "post traumatic stress disorder"}});
    registry.add({"anorexia_nervosa", other, {"anorexia"}});
    registry.add({"bulimia_nervosa", other, {"bulimia"}});
    registry.add({"adjustment_disorder", other, {}});
    registry.add({"alcohol_use_disorder", other, {"alcohol dependence"}});
    registry.add({"borderline_personality_disorder", other, {"bpd"}});
    return registry;
}

void LabelRegistry::add(FineLabelInfo info) {
    const std::string id_key = util::normalize_for_match(info.id);
    const auto existing = by_normalized_alias_.find(id_key);
    if (existing != by_normalized_alias_.end()) {
        // Merge aliases into the existing entry.
        FineLabelInfo& target = entries_[existing->second];
        for (auto& alias : info.aliases) {
            const std::string key = util::normalize_for_match(alias);
            if (by_normalized_alias_.emplace(key, existing->second).second) {
                target.aliases.push_back(std::move(alias));
            }
        }
        return;
    }
    const std::size_t index = entries_.size();
    by_id_[info.id] = index;
    by_normalized_alias_[id_key] = index;
    for (const auto& alias : info.aliases) {
        by_normalized_alias_.emplace(util::normalize_for_match(alias), index);
    }
    entries_.push_back(std::move(info));
}

void LabelRegistry::load_alias_file(const std::filesystem::path& path) {
    const nlohmann::json doc = nlohmann::json::parse(util::read_file(path));
    if (!doc.is_array()) {
        throw std::runtime_error("alias file must be a JSON array: " + path.string());
    }
    for (const auto& item : doc) {
        FineLabelInfo info;
        info.id = item.at("id").get<std::string>();
        const auto coarse = coarse_from_string(item.at("coarse").get<std::string>());
        if (!coarse) {
            throw std::runtime_error("alias file: unknown coarse label for " + info.id);
        }
        if (*coarse == CoarseLabel::healthy) {
            throw std::runtime_error("alias file: fine label cannot map to healthy: " + info.id);
        }
        info.coarse = *coarse;
        if (item.contains("aliases")) {
            info.aliases = item.at("aliases").get<std::vector<std::string>>();
        }
        add(std::move(info));
    }
}

bool LabelRegistry::is_known_fine(std::string_view id) const {
    return by_id_.find(std::string(id)) != by_id_.end();
}

std::optional<std::string> LabelRegistry::normalize_fine(std::string_view surface) const {
    const auto it = by_normalized_alias_.find(util::normalize_for_match(surface));
    if (it == by_normalized_alias_.end()) {
        return std::nullopt;
    }
    return entries_[it->second].id;
}

const FineLabelInfo* LabelRegistry::find(std::string_view id) const {
    const auto it = by_id_.find(std::string(id));
    if (it == by_id_.end()) {
        return nullptr;
    }
    return &entries_[it->second];
}

std::vector<std::string> LabelRegistry::surface_forms(const std::string& fine_id) const {
    const FineLabelInfo* info = find(fine_id);
    if (info == nullptr) {
        throw std::invalid_argument("unknown fine label: " + fine_id);
    }
    std::vector<std::string> forms;
    forms.push_back(spell_with_spaces(info->id));
    for (const auto& alias : info->aliases) {
        forms.push_back(alias);
    }
    return forms;
}

std::optional<LabelRegistry::ScanMatch> LabelRegistry::scan_first_match(
    std::string_view text) const {
    const std::string normalized = util::normalize_for_match(text);
    std::size_t best_pos = std::string::npos;
    std::size_t best_len = 0;
    std::optional<ScanMatch> best;

    const auto consider = [&](const std::string& phrase, const ScanMatch& match) {
        const std::string p = util::normalize_for_match(phrase);
        if (p.empty()) {
            return;
        }
        std::size_t pos = 0;
        while ((pos = normalized.find(p, pos)) != std::string::npos) {
            const bool left_ok = pos == 0 || normalized[pos - 1] == ' ';
            const std::size_t end = pos + p.size();
            const bool right_ok = end == normalized.size() || normalized[end] == ' ';
            if (left_ok && right_ok) {
                if (pos < best_pos || (pos == best_pos && p.size() > best_len)) {
                    best_pos = pos;
                    best_len = p.size();
                    best = match;
                }
                return;
            }
            ++pos;
        }
    };

    for (const auto& entry : entries_) {
        ScanMatch m{entry.coarse, entry.id};
        consider(spell_with_spaces(entry.id), m);
        for (const auto& alias : entry.aliases) {
            consider(alias, m);
        }
    }
    for (const auto& [alias, coarse] : std::map<std::string, CoarseLabel>{
             {"depressive disorder", CoarseLabel::depressive},
             {"depression", CoarseLabel::depressive},
             {"anxiety disorder", CoarseLabel::anxiety},
             {"anxiety", CoarseLabel::anxiety},
             {"healthy", CoarseLabel::healthy},
             {"healthy control", CoarseLabel::healthy},
             {"other disorder", CoarseLabel::other_disorder},
         }) {
        consider(alias, ScanMatch{coarse, std::nullopt});
    }
    return best;
}

}  // namespace clinsynth::corpus
