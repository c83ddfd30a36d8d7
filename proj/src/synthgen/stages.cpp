#include "clinsynth/synthgen/stages.hpp"

#include "clinsynth/synthgen/dedup.hpp"
#include "clinsynth/util/text.hpp"

#include <algorithm>
#include <cctype>

namespace clinsynth::synthgen {

namespace {

std::string section_tag(std::string_view section_name) {
    std::string tag(section_name);
    std::transform(tag.begin(), tag.end(), tag.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return tag;
}

// Parses "TAG: value" blocks for the seven sections; continuation lines
// accumulate into the current section. Missing tags are reported.
struct SectionParse {
    corpus::CaseRecord record;
    std::vector<std::string> missing;
};

SectionParse parse_sections(const std::string& case_id, const std::string& text) {
    SectionParse out;
    out.record.case_id = case_id;
    std::array<bool, corpus::kRecordSections.size()> found{};
    std::optional<std::size_t> current;
    std::array<std::string, corpus::kRecordSections.size()> values{};

    for (const auto& raw_line : util::split_lines(text)) {
        const std::string line = util::trim(raw_line);
        if (line.empty()) {
            current.reset();
            continue;
        }
        bool is_tag = false;
        for (std::size_t i = 0; i < corpus::kRecordSections.size(); ++i) {
            const std::string tag = section_tag(corpus::kRecordSections[i]) + ":";
            // Tolerate spaces for underscores ("CHIEF COMPLAINT:").
            const std::string alt = util::replace_all(tag, "_", " ");
            std::string matched;
            if (line.size() >= tag.size() &&
                util::to_lower(line.substr(0, tag.size())) == util::to_lower(tag)) {
                matched = tag;
            } else if (line.size() >= alt.size() &&
                       util::to_lower(line.substr(0, alt.size())) == util::to_lower(alt)) {
                matched = alt;
            }
            if (!matched.empty()) {
                found[i] = true;
                current = i;
                values[i] = util::trim(line.substr(matched.size()));
                is_tag = true;
                break;
            }
        }
        if (!is_tag && current) {
            if (!values[*current].empty()) {
                values[*current] += ' ';
            }
            values[*current] += line;
        }
    }

    for (std::size_t i = 0; i < corpus::kRecordSections.size(); ++i) {
        if (!found[i]) {
            out.missing.emplace_back(corpus::kRecordSections[i]);
            continue;
        }
        const std::string value =
            values[i].empty() ? std::string(corpus::kNotReported) : values[i];
        out.record.set_section(corpus::kRecordSections[i], value);
    }
    for (const auto& name : out.missing) {
        out.record.set_section(name, std::string(corpus::kNotReported));
    }
    return out;
}

}  // namespace

SynthgenTemplates SynthgenTemplates::load(const std::filesystem::path& dir) {
    return SynthgenTemplates{
        PromptTemplate::load(dir / "extract_record.txt"),
        PromptTemplate::load(dir / "repair_record.txt"),
        PromptTemplate::load(dir / "raw_interview.txt"),
        PromptTemplate::load(dir / "repair_interview.txt"),
        PromptTemplate::load(dir / "polish.txt"),
        PromptTemplate::load(dir / "leak_rewrite.txt"),
    };
}

std::string render_dialogue_block(const corpus::Dialogue& dialogue) {
    std::string out;
    for (const auto& u : dialogue.utterances) {
        out += u.speaker == corpus::Speaker::psychiatrist ? "PSYCHIATRIST: " : "CLIENT: ";
        out += u.text;
        out += '\n';
    }
    return out;
}

std::string render_sections_block(const corpus::CaseRecord& record) {
    std::string out;
    for (std::size_t i = 0; i < corpus::kRecordSections.size(); ++i) {
        out += section_tag(corpus::kRecordSections[i]);
        out += ": ";
        out += record.sections[i].empty() ? std::string(corpus::kNotReported)
                                          : record.sections[i];
        out += '\n';
    }
    return out;
}

ProtocolParse parse_line_protocol(const std::string& text) {
    ProtocolParse out;
    std::optional<corpus::Speaker> current_speaker;
    std::string current_text;

    const auto flush = [&] {
        if (!current_speaker) {
            return;
        }
        corpus::Utterance u;
        u.speaker = *current_speaker;
        u.text = util::trim(current_text);
        u.index = static_cast<int>(out.utterances.size());
        out.utterances.push_back(std::move(u));
        current_text.clear();
    };

    for (const auto& raw_line : util::split_lines(text)) {
        const std::string line = util::trim(raw_line);
        std::optional<corpus::Speaker> tag;
        std::string rest;
        const std::string upper = util::to_lower(line);
        if (upper.rfind("psychiatrist:", 0) == 0) {
            tag = corpus::Speaker::psychiatrist;
            rest = util::trim(line.substr(std::string("psychiatrist:").size()));
        } else if (upper.rfind("client:", 0) == 0) {
            tag = corpus::Speaker::client;
            rest = util::trim(line.substr(std::string("client:").size()));
        }
        if (tag) {
            flush();
            current_speaker = tag;
            current_text = rest;
        } else if (current_speaker && !line.empty()) {
            if (!current_text.empty()) {
                current_text += ' ';
            }
            current_text += line;
        }
    }
    flush();

    if (out.utterances.empty()) {
        out.problems.push_back("no protocol lines found");
        return out;
    }
    if (out.utterances.front().speaker != corpus::Speaker::psychiatrist) {
        out.problems.push_back("dialogue must open with PSYCHIATRIST:");
    }
    for (std::size_t i = 0; i < out.utterances.size(); ++i) {
        if (out.utterances[i].text.empty()) {
            out.problems.push_back("utterance " + std::to_string(i) + " is empty");
        }
        if (i > 0 && out.utterances[i].speaker == out.utterances[i - 1].speaker) {
            out.problems.push_back("utterances " + std::to_string(i - 1) + "/" +
                                   std::to_string(i) + " do not alternate");
        }
    }
    return out;
}

ExtractOutcome extract_record(const corpus::CaseDescription& case_description,
                              backend::Gateway& gateway, const std::string& backend_id,
                              const SynthgenTemplates& templates) {
    if (util::trim(case_description.text).empty()) {
        throw std::invalid_argument("extract_record: empty case text");
    }
    const std::string prompt =
        templates.extract_record.render({{"case_text", case_description.text}});
    const std::string first = gateway.complete(backend_id, {backend::user_msg(prompt)});

    SectionParse parsed = parse_sections(case_description.id, first);
    if (parsed.missing.empty()) {
        return {std::move(parsed.record), false};
    }

    const std::string repair_prompt = templates.repair_record.render(
        {{"case_text", case_description.text}, {"raw_output", first}});
    const std::string second = gateway.complete(backend_id, {backend::user_msg(repair_prompt)});
    parsed = parse_sections(case_description.id, second);
    if (!parsed.missing.empty()) {
        throw StageError("extract_record: sections missing after repair (" +
                             util::join(parsed.missing, ", ") + ")",
                         second);
    }
    return {std::move(parsed.record), true};
}

InterviewOutcome generate_raw_interview(const corpus::CaseRecord& record,
                                        backend::Gateway& gateway, const std::string& backend_id,
                                        const SynthgenTemplates& templates, int rounds,
                                        const corpus::Provenance& provenance) {
    if (rounds < 4) {
        throw std::invalid_argument(
            "generate_raw_interview: rounds must be >= 4 to cover the topic flow");
    }
    const std::map<std::string, std::string> bindings = {
        {"sections_block", render_sections_block(record)},
        {"rounds", std::to_string(rounds)},
    };
    const std::string prompt = templates.raw_interview.render(bindings);
    const std::string first = gateway.complete(backend_id, {backend::user_msg(prompt)});

    ProtocolParse parsed = parse_line_protocol(first);
    bool repaired = false;
    if (!parsed.problems.empty()) {
        const std::string repair_prompt = templates.repair_interview.render(
            {{"raw_output", first}, {"rounds", std::to_string(rounds)}});
        const std::string second =
            gateway.complete(backend_id, {backend::user_msg(repair_prompt)});
        parsed = parse_line_protocol(second);
        if (!parsed.problems.empty()) {
            throw StageError("generate_raw_interview: protocol violations after repair (" +
                                 util::join(parsed.problems, "; ") + ")",
                             second);
        }
        repaired = true;
    }

    corpus::Dialogue d;
    d.case_id = record.case_id;
    d.stage = corpus::DialogueStage::raw;
    d.provenance = provenance;
    d.utterances = std::move(parsed.utterances);
    return {std::move(d), repaired};
}

PolishOutcome polish_dialogue(const corpus::Dialogue& raw, corpus::CoarseLabel truth_coarse,
                              const std::optional<std::string>& truth_fine,
                              backend::Gateway& gateway, const std::string& backend_id,
                              const SynthgenTemplates& templates,
                              const std::vector<RedactionRule>& rules,
                              const corpus::LabelRegistry& registry) {
    if (raw.stage != corpus::DialogueStage::raw) {
        throw std::invalid_argument("polish_dialogue: input must be a raw dialogue");
    }

    const std::string prompt =
        templates.polish.render({{"dialogue_block", render_dialogue_block(raw)}});
    const std::string response = gateway.complete(backend_id, {backend::user_msg(prompt)});
    ProtocolParse parsed = parse_line_protocol(response);
    if (!parsed.problems.empty()) {
        throw StageError("polish_dialogue: unparseable polish output (" +
                             util::join(parsed.problems, "; ") + ")",
                         response);
    }

    corpus::Dialogue working = raw;
    working.utterances = std::move(parsed.utterances);

    PolishOutcome outcome;
    const auto apply_deterministic_passes = [&] {
        for (auto& u : working.utterances) {
            RedactionResult r = redact_pii(u.text, rules);
            outcome.redactions += r.replacements;
            u.text = std::move(r.text);
        }
        working = dedup_utterances(working);
    };

    apply_deterministic_passes();
    LeakReport leak = detect_leak(working, truth_coarse, truth_fine, registry);

    const auto terms = leak_terms(truth_coarse, truth_fine, registry);
    for (int iteration = 0; iteration < 2 && !leak.clean(); ++iteration) {
        for (const auto& hit : leak.hits) {
            auto& utterance = working.utterances[static_cast<std::size_t>(hit.utterance_index)];
            const std::string rewrite_prompt = templates.leak_rewrite.render(
                {{"utterance", utterance.text}, {"terms", util::join(terms, ", ")}});
            const std::string rewritten =
                gateway.complete(backend_id, {backend::user_msg(rewrite_prompt)});
            if (!util::trim(rewritten).empty()) {
                utterance.text = util::trim(rewritten);
            }
            outcome.repaired = true;
        }
        apply_deterministic_passes();
        leak = detect_leak(working, truth_coarse, truth_fine, registry);
    }

    outcome.leak = leak;
    if (!leak.clean()) {
        outcome.quarantined = true;
        return outcome;
    }
    working.stage = corpus::DialogueStage::polished;
    const auto problems = validate_dialogue(working);
    if (!problems.empty()) {
        throw StageError("polish_dialogue: invariants violated after polish (" +
                             util::join(problems, "; ") + ")",
                         render_dialogue_block(working));
    }
    outcome.polished = std::move(working);
    return outcome;
}

}  // namespace clinsynth::synthgen
