#include "clinsynth/synthgen/redact.hpp"

#include "clinsynth/util/jsonl.hpp"

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <stdexcept>

namespace clinsynth::synthgen {

namespace {

bool is_word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0;
}

bool ci_equal_at(std::string_view text, std::size_t pos, std::string_view term) {
    if (pos + term.size() > text.size()) {
        return false;
    }
    for (std::size_t i = 0; i < term.size(); ++i) {
        if (std::tolower(static_cast<unsigned char>(text[pos + i])) !=
            std::tolower(static_cast<unsigned char>(term[i]))) {
            return false;
        }
    }
    return true;
}

std::size_t placeholder_at(std::string_view text, std::size_t pos) {
    for (const std::string_view token : kRedactionPlaceholders) {
        if (text.substr(pos, token.size()) == token) {
            return token.size();
        }
    }
    return 0;
}

struct CompiledRule {
    const RedactionRule* rule;
    std::regex regex;  // pattern rules only
};

}  // namespace

void RedactionRule::validate() const {
    const bool known = std::any_of(std::begin(kRedactionPlaceholders),
                                   std::end(kRedactionPlaceholders),
                                   [&](std::string_view p) { return p == replacement; });
    if (!known) {
        throw std::invalid_argument("redaction replacement must be one of the placeholder "
                                    "tokens, got: " +
                                    replacement);
    }
    if (kind == RedactionKind::lexicon && terms.empty()) {
        throw std::invalid_argument("lexicon rule without terms");
    }
    if (kind == RedactionKind::pattern && pattern.empty()) {
        throw std::invalid_argument("pattern rule without pattern");
    }
}

std::vector<RedactionRule> load_redaction_rules(const std::filesystem::path& path) {
    const nlohmann::json doc = nlohmann::json::parse(util::read_file(path));
    std::vector<RedactionRule> rules;
    for (const auto& item : doc) {
        RedactionRule rule;
        const std::string kind = item.at("kind").get<std::string>();
        if (kind == "lexicon") {
            rule.kind = RedactionKind::lexicon;
            rule.terms = item.at("terms").get<std::vector<std::string>>();
        } else if (kind == "pattern") {
            rule.kind = RedactionKind::pattern;
            rule.pattern = item.at("pattern").get<std::string>();
        } else {
            throw std::invalid_argument("unknown redaction rule kind: " + kind);
        }
        rule.replacement = item.at("replacement").get<std::string>();
        rule.validate();
        rules.push_back(std::move(rule));
    }
    return rules;
}

RedactionResult redact_pii(std::string_view text, const std::vector<RedactionRule>& rules) {
    std::vector<CompiledRule> compiled;
    compiled.reserve(rules.size());
    for (const auto& rule : rules) {
        rule.validate();
        CompiledRule c{&rule, {}};
        if (rule.kind == RedactionKind::pattern) {
            c.regex = std::regex(rule.pattern, std::regex::ECMAScript);
        }
        compiled.push_back(std::move(c));
    }

    RedactionResult result;
    result.text.reserve(text.size());
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t ph = placeholder_at(text, pos);
        if (ph > 0) {
            result.text.append(text.substr(pos, ph));
            pos += ph;
            continue;
        }
        std::size_t best_len = 0;
        const std::string* best_replacement = nullptr;
        for (const auto& c : compiled) {
            if (c.rule->kind == RedactionKind::lexicon) {
                for (const auto& term : c.rule->terms) {
                    if (term.empty() || !ci_equal_at(text, pos, term)) {
                        continue;
                    }
                    const bool left_ok = pos == 0 || !is_word_char(text[pos - 1]);
                    const std::size_t end = pos + term.size();
                    const bool right_ok = end == text.size() || !is_word_char(text[end]);
                    if (left_ok && right_ok && term.size() > best_len) {
                        best_len = term.size();
                        best_replacement = &c.rule->replacement;
                    }
                }
            } else {
                std::cmatch m;
                const char* begin = text.data() + pos;
                const char* end = text.data() + text.size();
                if (std::regex_search(begin, end, m, c.regex,
                                      std::regex_constants::match_continuous) &&
                    m.length(0) > 0 && static_cast<std::size_t>(m.length(0)) > best_len) {
                    best_len = static_cast<std::size_t>(m.length(0));
                    best_replacement = &c.rule->replacement;
                }
            }
        }
        if (best_replacement != nullptr) {
            result.text.append(*best_replacement);
            result.replacements += 1;
            pos += best_len;
        } else {
            result.text.push_back(text[pos]);
            ++pos;
        }
    }
    return result;
}

}  // namespace clinsynth::synthgen
