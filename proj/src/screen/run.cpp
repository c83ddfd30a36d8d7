#include "clinsynth/screen/run.hpp"

#include "clinsynth/util/jsonl.hpp"
#include "clinsynth/util/parallel.hpp"

#include "json.hpp"

#include <stdexcept>

namespace clinsynth::screen {

using nlohmann::json;

RunResults run_screening(const std::vector<corpus::Dialogue>& dialogues,
                         backend::Gateway& gateway, const std::string& backend_id,
                         const PromptStrategy& strategy, const ScreenTemplates& templates,
                         const corpus::LabelRegistry& registry, int repeats) {
    if (dialogues.empty()) {
        throw std::invalid_argument("run_screening: empty dataset");
    }
    if (repeats < 1) {
        throw std::invalid_argument("run_screening: repeats must be >= 1");
    }
    strategy.validate();

    RunResults results;
    results.backend_id = backend_id;
    results.strategy = strategy.kind;
    results.repeats = repeats;

    const auto workers = static_cast<std::size_t>(
        gateway.backend(backend_id).config().max_in_flight);
    for (int repeat = 0; repeat < repeats; ++repeat) {
        std::vector<ScreeningOutput> outputs(dialogues.size());
        util::parallel_for(dialogues.size(), workers, [&](std::size_t i) {
            const auto messages = build_screen_prompt(dialogues[i], strategy, templates);
            try {
                const std::string text = gateway.complete(backend_id, messages);
                outputs[i] = parse_screen_output(text, registry);
            } catch (const backend::BackendError&) {
                outputs[i] = ScreeningOutput{std::nullopt, std::nullopt, "",
                                             ParseStatus::fallback_unknown};
            }
        });
        std::map<std::string, ScreeningOutput> repeat_map;
        for (std::size_t i = 0; i < dialogues.size(); ++i) {
            repeat_map[dialogues[i].case_id] = std::move(outputs[i]);
        }
        results.repeat_maps.push_back(std::move(repeat_map));
    }
    return results;
}

void save_run_results(const std::filesystem::path& path, const RunResults& results) {
    std::vector<std::string> lines;
    lines.push_back(json{{"record", "meta"},
                         {"backend_id", results.backend_id},
                         {"strategy", std::string(to_string(results.strategy))},
                         {"repeats", results.repeats}}
                        .dump());
    for (std::size_t repeat = 0; repeat < results.repeat_maps.size(); ++repeat) {
        for (const auto& [case_id, output] : results.repeat_maps[repeat]) {
            json j{{"record", "result"},
                   {"repeat", repeat},
                   {"case_id", case_id},
                   {"coarse", coarse_or_unknown(output)},
                   {"explanation", output.explanation},
                   {"parse_status", std::string(to_string(output.parse_status))}};
            if (output.fine) {
                j["fine"] = *output.fine;
            }
            lines.push_back(j.dump());
        }
    }
    util::write_lines(path, lines);
}

RunResults load_run_results(const std::filesystem::path& path) {
    RunResults results;
    results.repeats = 0;
    bool meta_seen = false;
    util::for_each_line(path, [&](int line_no, const std::string& line) {
        const json j = json::parse(line);
        const std::string record = j.at("record").get<std::string>();
        if (record == "meta") {
            results.backend_id = j.at("backend_id").get<std::string>();
            const auto strategy = strategy_from_string(j.at("strategy").get<std::string>());
            if (!strategy) {
                throw std::runtime_error("run results line " + std::to_string(line_no) +
                                         ": unknown strategy");
            }
            results.strategy = *strategy;
            results.repeats = j.at("repeats").get<int>();
            meta_seen = true;
            return;
        }
        if (!meta_seen) {
            throw std::runtime_error("run results: meta line must come first");
        }
        const auto repeat = j.at("repeat").get<std::size_t>();
        while (results.repeat_maps.size() <= repeat) {
            results.repeat_maps.emplace_back();
        }
        ScreeningOutput output;
        const std::string coarse = j.at("coarse").get<std::string>();
        if (coarse != "unknown") {
            const auto parsed = corpus::coarse_from_string(coarse);
            if (!parsed) {
                throw std::runtime_error("run results line " + std::to_string(line_no) +
                                         ": unknown coarse label");
            }
            output.coarse = *parsed;
        }
        if (j.contains("fine")) {
            output.fine = j.at("fine").get<std::string>();
        }
        output.explanation = j.at("explanation").get<std::string>();
        const auto status = parse_status_from_string(j.at("parse_status").get<std::string>());
        if (!status) {
            throw std::runtime_error("run results line " + std::to_string(line_no) +
                                     ": unknown parse_status");
        }
        output.parse_status = *status;
        results.repeat_maps[repeat][j.at("case_id").get<std::string>()] = std::move(output);
    });
    if (!meta_seen) {
        throw std::runtime_error("run results: missing meta line in " + path.string());
    }
    return results;
}

}  // namespace clinsynth::screen
