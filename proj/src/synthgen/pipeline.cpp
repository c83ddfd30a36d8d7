#include "clinsynth/synthgen/pipeline.hpp"

#include "clinsynth/corpus/io.hpp"
#include "clinsynth/util/hash.hpp"
#include "clinsynth/util/jsonl.hpp"
#include "clinsynth/util/parallel.hpp"

#include "json.hpp"

namespace clinsynth::synthgen {

using nlohmann::json;

PipelineResult run_pipeline(const corpus::CaseSet& cases, backend::Gateway& gateway,
                            const SynthgenTemplates& templates,
                            const corpus::LabelRegistry& registry,
                            const PipelineOptions& options) {
    if (cases.cases.empty()) {
        throw std::invalid_argument("run_pipeline: empty case set");
    }
    const auto& backend_config = gateway.backend(options.backend_id).config();
    const std::size_t workers = options.max_concurrent_cases > 0
                                    ? static_cast<std::size_t>(options.max_concurrent_cases)
                                    : static_cast<std::size_t>(backend_config.max_in_flight);

    PipelineResult result;
    result.outcomes.resize(cases.cases.size());

    util::parallel_for(cases.cases.size(), workers, [&](std::size_t i) {
        const corpus::CaseDescription& c = cases.cases[i];
        CaseOutcome& outcome = result.outcomes[i];
        outcome.case_id = c.id;
        try {
            ExtractOutcome extracted = extract_record(c, gateway, options.backend_id, templates);
            outcome.record = extracted.record;
            outcome.repaired = extracted.repaired;

            corpus::Provenance provenance{options.run_id, options.backend_id, options.seed};
            InterviewOutcome interview =
                generate_raw_interview(extracted.record, gateway, options.backend_id, templates,
                                       options.rounds, provenance);
            outcome.repaired = outcome.repaired || interview.repaired;

            PolishOutcome polished = polish_dialogue(
                interview.dialogue, c.truth_coarse, c.truth_fine, gateway, options.backend_id,
                templates, options.redaction_rules, registry);
            outcome.repaired = outcome.repaired || polished.repaired;
            outcome.leak = polished.leak;
            if (polished.quarantined) {
                outcome.status = CaseStatus::quarantined;
                return;
            }
            outcome.dialogue = std::move(polished.polished);
            outcome.status = CaseStatus::succeeded;
        } catch (const StageError& e) {
            outcome.status = CaseStatus::failed;
            outcome.error = e.what();
        } catch (const backend::BackendError& e) {
            outcome.status = CaseStatus::failed;
            outcome.error = e.what();
        }
    });

    PipelineManifest& m = result.manifest;
    m.run_id = options.run_id;
    m.backend_id = options.backend_id;
    m.seed = options.seed;
    m.rounds = options.rounds;
    m.n_cases = cases.cases.size();
    for (const auto& outcome : result.outcomes) {
        switch (outcome.status) {
            case CaseStatus::succeeded:
                ++m.succeeded;
                break;
            case CaseStatus::quarantined:
                ++m.quarantined;
                break;
            case CaseStatus::failed:
                ++m.failed;
                break;
        }
        if (outcome.repaired && outcome.status == CaseStatus::succeeded) {
            ++m.repaired;
        }
    }
    return result;
}

void write_dataset(const std::filesystem::path& dir, const PipelineResult& result,
                   const corpus::CaseSet& cases) {
    std::filesystem::create_directories(dir);

    std::vector<std::string> dialogue_lines;
    std::vector<std::string> record_lines;
    std::vector<std::string> quarantine_lines;
    std::vector<std::string> failure_lines;
    for (const auto& outcome : result.outcomes) {
        if (outcome.record) {
            record_lines.push_back(corpus::record_to_json_line(*outcome.record));
        }
        if (outcome.status == CaseStatus::succeeded && outcome.dialogue) {
            dialogue_lines.push_back(corpus::dialogue_to_json_line(*outcome.dialogue));
        } else if (outcome.status == CaseStatus::quarantined) {
            json hits = json::array();
            if (outcome.leak) {
                for (const auto& hit : outcome.leak->hits) {
                    hits.push_back({{"utterance_index", hit.utterance_index},
                                    {"matched_term", hit.matched_term},
                                    {"label_term", hit.label_term}});
                }
            }
            quarantine_lines.push_back(
                json{{"case_id", outcome.case_id}, {"leak_hits", hits}}.dump());
        } else if (outcome.status == CaseStatus::failed) {
            failure_lines.push_back(
                json{{"case_id", outcome.case_id}, {"error", outcome.error}}.dump());
        }
    }

    util::write_lines(dir / "dialogues.jsonl", dialogue_lines);
    util::write_lines(dir / "records.jsonl", record_lines);
    util::write_lines(dir / "quarantine.jsonl", quarantine_lines);
    if (!failure_lines.empty()) {
        util::write_lines(dir / "failures.jsonl", failure_lines);
    }

    json manifest;
    manifest["run_id"] = result.manifest.run_id;
    manifest["backend_id"] = result.manifest.backend_id;
    manifest["seed"] = result.manifest.seed;
    manifest["rounds"] = result.manifest.rounds;
    manifest["n_cases"] = result.manifest.n_cases;
    manifest["counts"] = {{"succeeded", result.manifest.succeeded},
                          {"repaired", result.manifest.repaired},
                          {"quarantined", result.manifest.quarantined},
                          {"failed", result.manifest.failed}};
    json hashes;
    for (const char* name : {"dialogues.jsonl", "records.jsonl", "quarantine.jsonl"}) {
        hashes[name] = util::sha256_hex(util::read_file(dir / name));
    }
    manifest["output_sha256"] = std::move(hashes);
    manifest["n_input_cases"] = cases.cases.size();
    util::write_file(dir / "manifest.json", manifest.dump(2) + "\n");
}

}  // namespace clinsynth::synthgen
