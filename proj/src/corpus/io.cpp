#include "clinsynth/corpus/io.hpp"

#include "clinsynth/util/jsonl.hpp"
#include "clinsynth/util/text.hpp"

#include "json.hpp"

#include <set>
#include <stdexcept>

namespace clinsynth::corpus {

using nlohmann::json;

namespace {

json case_to_json(const CaseDescription& c) {
    json j;
    j["id"] = c.id;
    j["source_kind"] = std::string(to_string(c.source_kind));
    j["text"] = c.text;
    j["truth_coarse"] = std::string(to_string(c.truth_coarse));
    if (c.truth_fine) {
        j["truth_fine"] = *c.truth_fine;
    }
    if (c.truth_explanation) {
        j["truth_explanation"] = *c.truth_explanation;
    }
    return j;
}

CaseDescription case_from_json(const json& j, const LabelRegistry& registry) {
    CaseDescription c;
    c.id = j.at("id").get<std::string>();
    if (c.id.empty()) {
        throw std::runtime_error("empty id");
    }

    const std::string kind = j.at("source_kind").get<std::string>();
    const auto source = source_kind_from_string(kind);
    if (!source) {
        throw std::runtime_error("unknown source_kind: " + kind);
    }
    c.source_kind = *source;

    c.text = j.at("text").get<std::string>();
    if (util::trim(c.text).empty()) {
        throw std::runtime_error("empty text");
    }

    const std::string coarse = j.at("truth_coarse").get<std::string>();
    const auto label = coarse_from_string(coarse);
    if (!label) {
        throw std::runtime_error("unknown label: " + coarse);
    }
    c.truth_coarse = *label;

    if (j.contains("truth_fine") && !j.at("truth_fine").is_null()) {
        const std::string fine = j.at("truth_fine").get<std::string>();
        const auto canonical = registry.normalize_fine(fine);
        if (!canonical) {
            throw std::runtime_error("unknown fine label: " + fine);
        }
        if (c.truth_coarse == CoarseLabel::healthy) {
            throw std::runtime_error("fine label on a healthy case");
        }
        c.truth_fine = *canonical;
    }
    if (j.contains("truth_explanation") && !j.at("truth_explanation").is_null()) {
        c.truth_explanation = j.at("truth_explanation").get<std::string>();
    }
    return c;
}

json dialogue_to_json(const Dialogue& d) {
    json j;
    j["case_id"] = d.case_id;
    j["stage"] = std::string(to_string(d.stage));
    json utts = json::array();
    for (const auto& u : d.utterances) {
        utts.push_back({{"speaker", std::string(to_string(u.speaker))},
                        {"text", u.text},
                        {"index", u.index}});
    }
    j["utterances"] = std::move(utts);
    j["provenance"] = {{"run_id", d.provenance.run_id},
                       {"backend_id", d.provenance.backend_id},
                       {"seed", d.provenance.seed}};
    return j;
}

Dialogue dialogue_from_json(const json& j) {
    Dialogue d;
    d.case_id = j.at("case_id").get<std::string>();
    const std::string stage = j.at("stage").get<std::string>();
    const auto parsed_stage = stage_from_string(stage);
    if (!parsed_stage) {
        throw std::runtime_error("unknown stage: " + stage);
    }
    d.stage = *parsed_stage;
    for (const auto& u : j.at("utterances")) {
        Utterance utt;
        const std::string speaker = u.at("speaker").get<std::string>();
        const auto parsed_speaker = speaker_from_string(speaker);
        if (!parsed_speaker) {
            throw std::runtime_error("unknown speaker: " + speaker);
        }
        utt.speaker = *parsed_speaker;
        utt.text = u.at("text").get<std::string>();
        utt.index = u.at("index").get<int>();
        d.utterances.push_back(std::move(utt));
    }
    if (j.contains("provenance")) {
        const auto& p = j.at("provenance");
        d.provenance.run_id = p.value("run_id", "");
        d.provenance.backend_id = p.value("backend_id", "");
        d.provenance.seed = p.value("seed", std::uint64_t{0});
    }
    const auto problems = validate_dialogue(d);
    if (!problems.empty()) {
        throw std::runtime_error(problems.front());
    }
    return d;
}

}  // namespace

std::string case_to_json_line(const CaseDescription& c) {
    return case_to_json(c).dump();
}

std::string record_to_json_line(const CaseRecord& r) {
    json sections;
    json completeness;
    for (std::size_t i = 0; i < kRecordSections.size(); ++i) {
        const std::string key(kRecordSections[i]);
        sections[key] = r.sections[i];
        completeness[key] = r.present[i];
    }
    return json{{"case_id", r.case_id},
                {"sections", std::move(sections)},
                {"completeness", std::move(completeness)}}
        .dump();
}

RecordLoadResult load_records(const std::filesystem::path& path, const LoadOptions& options) {
    RecordLoadResult result;
    util::for_each_line(path, [&](int line_no, const std::string& line) {
        try {
            const json j = json::parse(line);
            CaseRecord r;
            r.case_id = j.at("case_id").get<std::string>();
            const auto& sections = j.at("sections");
            for (std::size_t i = 0; i < kRecordSections.size(); ++i) {
                const std::string key(kRecordSections[i]);
                r.set_section(key, sections.at(key).get<std::string>());
            }
            result.records.push_back(std::move(r));
        } catch (const std::exception& e) {
            result.rejects.push_back({line_no, e.what(), line});
        }
    });
    if (options.write_rejects_file && !result.rejects.empty()) {
        write_rejects_file(path, result.rejects);
    }
    return result;
}

std::string dialogue_to_json_line(const Dialogue& d) {
    return dialogue_to_json(d).dump();
}

CaseLoadResult load_cases(const std::filesystem::path& path, const LabelRegistry& registry,
                          const LoadOptions& options) {
    CaseLoadResult result;
    std::set<std::string> seen_ids;
    util::for_each_line(path, [&](int line_no, const std::string& line) {
        try {
            const json j = json::parse(line);
            CaseDescription c = case_from_json(j, registry);
            if (!seen_ids.insert(c.id).second) {
                throw std::runtime_error("duplicate id: " + c.id);
            }
            result.cases.cases.push_back(std::move(c));
        } catch (const std::exception& e) {
            result.rejects.push_back({line_no, e.what(), line});
        }
    });
    if (options.write_rejects_file && !result.rejects.empty()) {
        write_rejects_file(path, result.rejects);
    }
    return result;
}

DialogueLoadResult load_dialogues(const std::filesystem::path& path, const LoadOptions& options) {
    DialogueLoadResult result;
    util::for_each_line(path, [&](int line_no, const std::string& line) {
        try {
            const json j = json::parse(line);
            result.dialogues.dialogues.push_back(dialogue_from_json(j));
        } catch (const std::exception& e) {
            result.rejects.push_back({line_no, e.what(), line});
        }
    });
    if (options.write_rejects_file && !result.rejects.empty()) {
        write_rejects_file(path, result.rejects);
    }
    return result;
}

void save_cases(const std::filesystem::path& path, const CaseSet& cases) {
    std::vector<std::string> lines;
    lines.reserve(cases.cases.size());
    for (const auto& c : cases.cases) {
        lines.push_back(case_to_json_line(c));
    }
    util::write_lines(path, lines);
}

void save_dialogues(const std::filesystem::path& path, const DialogueSet& dialogues) {
    std::vector<std::string> lines;
    lines.reserve(dialogues.dialogues.size());
    for (const auto& d : dialogues.dialogues) {
        lines.push_back(dialogue_to_json_line(d));
    }
    util::write_lines(path, lines);
}

void write_rejects_file(const std::filesystem::path& input_path,
                        const std::vector<RejectedLine>& rejects) {
    std::filesystem::path out = input_path;
    out += ".rejects.jsonl";
    std::vector<std::string> lines;
    lines.reserve(rejects.size());
    for (const auto& r : rejects) {
        lines.push_back(
            json{{"line", r.line_no}, {"reason", r.reason}, {"record", r.line}}.dump());
    }
    util::write_lines(out, lines);
}

}  // namespace clinsynth::corpus
