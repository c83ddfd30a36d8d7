#include "clinsynth/screen/parse.hpp"

#include "clinsynth/util/text.hpp"

#include <algorithm>

namespace clinsynth::screen {

namespace {

struct TaggedLines {
    std::optional<std::string> result;
    std::optional<std::string> fine;
    std::optional<std::string> explanation;
};

// Finds "TAG:" at the start of a line (case-insensitive, markdown bullets
// and bold markers tolerated).
std::optional<std::string> tag_value(const std::string& line, std::string_view tag) {
    std::string t = util::trim(line);
    while (!t.empty() && (t.front() == '-' || t.front() == '*' || t.front() == '#')) {
        t.erase(t.begin());
        t = util::trim(t);
    }
    if (t.size() < tag.size() + 1) {
        return std::nullopt;
    }
    if (util::to_lower(t.substr(0, tag.size())) != util::to_lower(std::string(tag))) {
        return std::nullopt;
    }
    std::string rest = t.substr(tag.size());
    rest = util::trim(rest);
    if (rest.empty() || rest.front() != ':') {
        return std::nullopt;
    }
    return util::trim(rest.substr(1));
}

TaggedLines scan_tags(const std::vector<std::string>& lines) {
    TaggedLines tags;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (!tags.result) {
            tags.result = tag_value(lines[i], "RESULT");
            if (tags.result) {
                continue;
            }
        }
        if (!tags.fine) {
            tags.fine = tag_value(lines[i], "FINE");
            if (tags.fine) {
                continue;
            }
        }
        if (!tags.explanation) {
            if (auto value = tag_value(lines[i], "EXPLANATION")) {
                // The explanation may continue onto following lines.
                std::string full = *value;
                for (std::size_t j = i + 1; j < lines.size(); ++j) {
                    if (tag_value(lines[j], "RESULT") || tag_value(lines[j], "FINE")) {
                        break;
                    }
                    const std::string cont = util::trim(lines[j]);
                    if (!cont.empty()) {
                        if (!full.empty()) {
                            full += ' ';
                        }
                        full += cont;
                    }
                }
                tags.explanation = full;
            }
        }
    }
    return tags;
}

// Interprets a RESULT value as a coarse label, directly or via a fine label.
struct LabelInterpretation {
    std::optional<corpus::CoarseLabel> coarse;
    std::optional<std::string> fine;
};

LabelInterpretation interpret_label(const std::string& value,
                                    const corpus::LabelRegistry& registry) {
    LabelInterpretation out;
    if (const auto coarse = corpus::coarse_from_alias(value)) {
        out.coarse = *coarse;
        return out;
    }
    if (const auto fine = registry.normalize_fine(value)) {
        out.fine = *fine;
        out.coarse = registry.find(*fine)->coarse;
    }
    return out;
}

}  // namespace

std::string_view to_string(ParseStatus status) {
    switch (status) {
        case ParseStatus::clean:
            return "clean";
        case ParseStatus::repaired:
            return "repaired";
        case ParseStatus::fallback_unknown:
            return "fallback_unknown";
    }
    return "unknown";
}

std::optional<ParseStatus> parse_status_from_string(std::string_view s) {
    for (const ParseStatus status :
         {ParseStatus::clean, ParseStatus::repaired, ParseStatus::fallback_unknown}) {
        if (s == to_string(status)) {
            return status;
        }
    }
    return std::nullopt;
}

ScreeningOutput parse_screen_output(std::string_view text,
                                    const corpus::LabelRegistry& registry) {
    ScreeningOutput out;
    const auto lines = util::split_lines(std::string(text));
    const TaggedLines tags = scan_tags(lines);

    if (tags.result) {
        const LabelInterpretation label = interpret_label(*tags.result, registry);
        if (label.coarse) {
            out.coarse = label.coarse;
            out.fine = label.fine;
            if (tags.fine && !out.fine) {
                if (const auto fine = registry.normalize_fine(*tags.fine)) {
                    out.fine = *fine;
                }
            }
            if (out.coarse == corpus::CoarseLabel::healthy) {
                out.fine.reset();
            }
            if (tags.explanation && !tags.explanation->empty()) {
                out.explanation = *tags.explanation;
                out.parse_status = ParseStatus::clean;
            } else {
                // Labeled but unexplained output: keep the full text as the
                // audit trail and mark it repaired.
                out.explanation = util::trim(std::string(text));
                out.parse_status = ParseStatus::repaired;
            }
            if (out.explanation.empty()) {
                out.explanation = "(no explanation produced)";
                out.parse_status = ParseStatus::repaired;
            }
            return out;
        }
    }

    // Lenient fallback: first registry match within the final 5 lines.
    const std::size_t start = lines.size() > 5 ? lines.size() - 5 : 0;
    for (std::size_t i = start; i < lines.size(); ++i) {
        if (const auto match = registry.scan_first_match(lines[i])) {
            out.coarse = match->coarse;
            out.fine = match->fine;
            if (out.coarse == corpus::CoarseLabel::healthy) {
                out.fine.reset();
            }
            out.explanation = util::trim(std::string(text));
            if (out.explanation.empty()) {
                out.explanation = "(label recovered from unstructured output)";
            }
            out.parse_status = ParseStatus::repaired;
            return out;
        }
    }

    out.coarse.reset();
    out.fine.reset();
    out.explanation.clear();
    out.parse_status = ParseStatus::fallback_unknown;
    return out;
}

std::string format_screen_output(const ScreeningOutput& output) {
    std::string text = "RESULT: ";
    text += output.coarse ? std::string(to_string(*output.coarse)) : "unknown";
    text += '\n';
    if (output.fine) {
        text += "FINE: " + util::replace_all(*output.fine, "_", " ") + '\n';
    }
    text += "EXPLANATION: " + output.explanation;
    return text;
}

std::string coarse_or_unknown(const ScreeningOutput& output) {
    return output.coarse ? std::string(to_string(*output.coarse)) : "unknown";
}

}  // namespace clinsynth::screen
