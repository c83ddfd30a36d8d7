#include "clinsynth/backend/mock.hpp"

#include "clinsynth/util/hash.hpp"
#include "clinsynth/util/text.hpp"

#include <algorithm>
#include <chrono>
#include <regex>
#include <thread>

namespace clinsynth::backend {

namespace {

const char* const kSectionTags[] = {
    "IDENTIFICATION",
    "CHIEF_COMPLAINT",
    "HISTORY_OF_PRESENT_ILLNESS",
    "MEDICAL_HISTORY",
    "DRUG_ALCOHOL_HISTORY",
    "FAMILY_HISTORY_OF_MENTAL_DISORDER",
    "PERSONAL_SOCIAL_HISTORY",
};

const char* const kTopicQuestions[] = {
    "Thank you for coming in today. Could you start by telling me a little about yourself and "
    "what brings you here?",
    "I see. Could you tell me more about how these difficulties have been developing recently?",
    "Do you have any medical or psychiatric history that I should be aware of?",
    "How about alcohol, tobacco, or any other substances - do you use any of them?",
    "Does anyone in your family have a history of mental disorder?",
    "Could you tell me about your personal and social life, such as work and relationships?",
    "Is there anything else you feel is important for me to understand about your situation?",
    "How have these experiences been affecting your day-to-day functioning?",
};

const char* const kAnswerOpeners[] = {
    "Well,",          "To be honest,",     "Hmm,",       "I suppose",
    "Now that you ask,", "Let me think.",  "Honestly,",  "I would say",
    "It is hard to put into words, but", "Looking back,",
};

std::string concat_contents(const std::vector<ChatMessage>& messages) {
    std::string all;
    for (const auto& m : messages) {
        all += to_string(m.role);
        all += ": ";
        all += m.content;
        all += '\n';
    }
    return all;
}

std::uint64_t mix_seed(std::uint64_t seed, const std::string& request_text) {
    return util::derive_subseed(seed, util::sha256_hex(request_text));
}

std::vector<std::string> sentences_of(std::string_view text) {
    std::vector<std::string> out;
    std::string current;
    for (const char c : text) {
        current.push_back(c);
        if (c == '.' || c == '!' || c == '?') {
            const std::string t = util::trim(current);
            if (!t.empty()) {
                out.push_back(t);
            }
            current.clear();
        }
    }
    const std::string t = util::trim(current);
    if (!t.empty()) {
        out.push_back(t);
    }
    return out;
}

std::string after_marker(const std::string& text, std::string_view marker) {
    const std::size_t pos = text.find(marker);
    if (pos == std::string::npos) {
        return {};
    }
    return text.substr(pos + marker.size());
}

// Values of "TAG: value" lines for the seven section tags, in section order.
std::vector<std::string> parse_section_values(const std::string& text) {
    std::vector<std::string> values(std::size(kSectionTags));
    for (const auto& line : util::split_lines(text)) {
        for (std::size_t i = 0; i < std::size(kSectionTags); ++i) {
            const std::string tag = std::string(kSectionTags[i]) + ":";
            const std::string trimmed = util::trim(line);
            if (trimmed.rfind(tag, 0) == 0) {
                values[i] = util::trim(trimmed.substr(tag.size()));
            }
        }
    }
    return values;
}

std::string generate_extract(const std::string& all) {
    const std::string body = after_marker(all, "CASE DESCRIPTION:");
    const auto sentences = sentences_of(body);
    std::string out;
    for (std::size_t i = 0; i < std::size(kSectionTags); ++i) {
        out += kSectionTags[i];
        out += ": ";
        out += i < sentences.size() ? sentences[i] : "not reported";
        out += '\n';
    }
    return out;
}

std::string generate_interview(const std::string& all, std::uint64_t mixed) {
    int rounds = 8;
    std::smatch m;
    if (std::regex_search(all, m, std::regex(R"(exactly (\d+) rounds)"))) {
        rounds = std::stoi(m[1].str());
    }
    const auto sections = parse_section_values(all);
    std::string out;
    for (int r = 0; r < rounds; ++r) {
        const std::size_t qi = static_cast<std::size_t>(r) % std::size(kTopicQuestions);
        std::string question = kTopicQuestions[qi];
        if (static_cast<std::size_t>(r) >= std::size(kTopicQuestions)) {
            question = "Let me make sure I understood one more detail, question " +
                       std::to_string(r + 1) + ": " + question;
        }
        if (r == rounds - 1) {
            question =
                "We are coming to the end of our interview now. Thank you for sharing all of "
                "this with me; we will go over the next steps together shortly.";
        }
        const std::size_t oi = (static_cast<std::size_t>(r) + mixed) % std::size(kAnswerOpeners);
        std::string detail;
        if (!sections.empty()) {
            const std::string& v = sections[static_cast<std::size_t>(r) % sections.size()];
            if (!v.empty() && util::normalize_for_match(v) != "not reported") {
                detail = v;
            }
        }
        if (detail.empty()) {
            detail = "nothing much comes to mind on that point, at least not recently";
        }
        std::string answer = std::string(kAnswerOpeners[oi]) + " " + detail;
        if (r == rounds - 1) {
            answer = std::string(kAnswerOpeners[oi]) +
                     " thank you, doctor. That covers everything I wanted to bring up today.";
        }
        out += "PSYCHIATRIST: " + question + "\n";
        out += "CLIENT: " + answer + "\n";
    }
    return out;
}

std::string generate_polish(const std::string& all) {
    // Echo the dialogue lines; the deterministic passes downstream do the work.
    std::string out;
    bool in_block = false;
    for (const auto& line : util::split_lines(all)) {
        const std::string t = util::trim(line);
        if (t.rfind("PSYCHIATRIST:", 0) == 0 || t.rfind("CLIENT:", 0) == 0) {
            in_block = true;
            out += t;
            out += '\n';
        } else if (in_block && t.empty()) {
            in_block = false;
        }
    }
    return out;
}

std::string ci_erase_terms(std::string text, const std::vector<std::string>& terms) {
    for (const auto& term : terms) {
        if (term.empty()) {
            continue;
        }
        const std::string lower_term = util::to_lower(term);
        while (true) {
            const std::string lower_text = util::to_lower(text);
            const std::size_t pos = lower_text.find(lower_term);
            if (pos == std::string::npos) {
                break;
            }
            text = text.substr(0, pos) + "this condition" + text.substr(pos + term.size());
        }
    }
    return text;
}

std::string generate_rewrite(const std::string& all) {
    std::string utterance = util::trim(after_marker(all, "UTTERANCE:"));
    const std::size_t terms_pos = utterance.find("REMOVE TERMS:");
    std::vector<std::string> terms;
    if (terms_pos != std::string::npos) {
        std::string term_part = utterance.substr(terms_pos + std::string("REMOVE TERMS:").size());
        utterance = util::trim(utterance.substr(0, terms_pos));
        std::size_t start = 0;
        while (start <= term_part.size()) {
            const std::size_t comma = term_part.find(',', start);
            const std::string term = util::trim(
                term_part.substr(start, comma == std::string::npos ? std::string::npos
                                                                   : comma - start));
            if (!term.empty()) {
                terms.push_back(term);
            }
            if (comma == std::string::npos) {
                break;
            }
            start = comma + 1;
        }
    }
    const std::string rewritten = ci_erase_terms(utterance, terms);
    if (util::trim(rewritten).empty()) {
        return "I would rather not put a name on it; let us focus on how things have been.";
    }
    return rewritten;
}

std::string generate_screening(const std::string& all, std::uint64_t mixed) {
    static const char* const kCoarse[] = {"depressive", "anxiety", "other_disorder", "healthy"};
    static const char* const kFine[] = {"major depressive disorder", "generalized anxiety disorder",
                                        "schizophrenia", ""};
    const std::size_t pick = mixed % 4;
    std::string out = std::string("RESULT: ") + kCoarse[pick] + "\n";
    if (pick != 3) {
        out += std::string("FINE: ") + kFine[pick] + "\n";
    }
    out += "EXPLANATION: The conversational history shows a pattern of reported difficulties "
           "and background factors consistent with this screening outcome.";
    return out;
}

std::string generate_judge(const std::string& all, std::uint64_t mixed) {
    // Dimension ids are listed as "- <id>:" lines in the judge prompt.
    std::string out;
    std::size_t k = 0;
    for (const auto& line : util::split_lines(all)) {
        const std::string t = util::trim(line);
        if (t.rfind("- ", 0) == 0) {
            const std::size_t colon = t.find(':');
            if (colon == std::string::npos) {
                continue;
            }
            const std::string id = util::trim(t.substr(2, colon - 2));
            if (id.empty() || id.find(' ') != std::string::npos) {
                continue;
            }
            static const char* const kVerdicts[] = {"A", "B", "Tie"};
            out += id;
            out += ": ";
            out += kVerdicts[(mixed + k) % 3];
            out += '\n';
            ++k;
        }
    }
    return out;
}

std::string generate_interviewer_turn(const std::vector<ChatMessage>& messages,
                                      std::uint64_t mixed) {
    std::size_t own_turns = 0;
    for (const auto& m : messages) {
        if (m.role == Role::assistant) {
            ++own_turns;
        }
    }
    const std::size_t qi = own_turns % std::size(kTopicQuestions);
    std::string q = kTopicQuestions[qi];
    if (own_turns >= std::size(kTopicQuestions)) {
        q = "Coming back to something you mentioned, question " + std::to_string(own_turns + 1) +
            ": " + q;
    }
    (void)mixed;
    return q;
}

std::string generate_patient_turn(const std::vector<ChatMessage>& messages, std::uint64_t mixed) {
    std::string last_question;
    for (const auto& m : messages) {
        if (m.role == Role::user) {
            last_question = m.content;
        }
    }
    std::size_t own_turns = 0;
    for (const auto& m : messages) {
        if (m.role == Role::assistant) {
            ++own_turns;
        }
    }
    const auto words = util::split_whitespace(last_question);
    std::string echo;
    for (std::size_t i = 0; i < std::min<std::size_t>(words.size(), 6); ++i) {
        echo += words[i];
        echo += ' ';
    }
    const std::size_t oi = (own_turns + mixed) % std::size(kAnswerOpeners);
    return std::string(kAnswerOpeners[oi]) + " about \"" + util::trim(echo) +
           "\" - I have been trying to manage, but some days are harder than others (turn " +
           std::to_string(own_turns + 1) + ").";
}

}  // namespace

MockBackend::MockBackend(BackendConfig config) : config_(std::move(config)) {
    config_.validate();
}

void MockBackend::add_rule(MockRule rule) {
    std::lock_guard lock(mu_);
    rules_.push_back(std::move(rule));
    rule_cursor_.push_back(0);
}

void MockBackend::clear_rules() {
    std::lock_guard lock(mu_);
    rules_.clear();
    rule_cursor_.clear();
}

std::vector<std::vector<ChatMessage>> MockBackend::captured_requests() const {
    std::lock_guard lock(mu_);
    return captured_;
}

std::string MockBackend::scripted_or_generated(const std::vector<ChatMessage>& messages) {
    const std::string all = concat_contents(messages);
    {
        std::lock_guard lock(mu_);
        for (std::size_t i = 0; i < rules_.size(); ++i) {
            if (all.find(rules_[i].contains) == std::string::npos) {
                continue;
            }
            if (!rules_[i].fail.empty()) {
                throw BackendError("scripted failure: " + rules_[i].fail);
            }
            if (rules_[i].responses.empty()) {
                continue;
            }
            const std::size_t cursor =
                std::min(rule_cursor_[i], rules_[i].responses.size() - 1);
            rule_cursor_[i] = cursor + 1;
            return rules_[i].responses[cursor];
        }
    }

    const std::uint64_t mixed = mix_seed(config_.seed, all);
    if (all.find("seven screening sections") != std::string::npos) {
        return generate_extract(all);
    }
    if (all.find("Rewrite the utterance") != std::string::npos) {
        return generate_rewrite(all);
    }
    if (all.find("Polish the interview") != std::string::npos) {
        return generate_polish(all);
    }
    if (all.find("Write the interview") != std::string::npos) {
        return generate_interview(all, mixed);
    }
    if (all.find("one verdict line") != std::string::npos) {
        return generate_judge(all, mixed);
    }
    if (all.find("RESULT:") != std::string::npos) {
        return generate_screening(all, mixed);
    }
    if (all.find("conducting a brief screening interview") != std::string::npos) {
        return generate_interviewer_turn(messages, mixed);
    }
    if (all.find("role-playing the client") != std::string::npos) {
        return generate_patient_turn(messages, mixed);
    }
    return "Understood (" + util::sha256_hex(all).substr(0, 8) + ").";
}

CompletionResult MockBackend::complete(const std::vector<ChatMessage>& messages) {
    validate_messages(messages);
    calls_.fetch_add(1);
    const int now = in_flight_.fetch_add(1) + 1;
    int seen = max_in_flight_seen_.load();
    while (now > seen && !max_in_flight_seen_.compare_exchange_weak(seen, now)) {
    }
    if (capture_requests_.load()) {
        std::lock_guard lock(mu_);
        captured_.push_back(messages);
    }
    const int delay = artificial_delay_ms_.load();
    if (delay > 0) {
        std::this_thread::sleep_for(std::chrono::milliseconds(delay));
    }
    try {
        CompletionResult result;
        result.text = scripted_or_generated(messages);
        result.attempt = 1;
        result.latency_ms = 0;
        in_flight_.fetch_sub(1);
        return result;
    } catch (...) {
        in_flight_.fetch_sub(1);
        throw;
    }
}

}  // namespace clinsynth::backend
