#include "clinsynth/simulate/session.hpp"

#include "clinsynth/synthgen/leak.hpp"
#include "clinsynth/synthgen/stages.hpp"
#include "clinsynth/util/text.hpp"

namespace clinsynth::simulate {

namespace {

std::string scrub_terms(std::string text, const std::vector<std::string>& terms) {
    for (const auto& term : terms) {
        while (util::contains_phrase(text, term)) {
            const std::string lower_text = util::to_lower(text);
            const std::string lower_term = util::to_lower(term);
            const std::size_t pos = lower_text.find(lower_term);
            if (pos == std::string::npos) {
                // Normalized phrase match without a literal substring hit
                // (punctuation variants); give up rather than loop.
                break;
            }
            text = text.substr(0, pos) + "a previously assessed condition" +
                   text.substr(pos + term.size());
        }
    }
    return text;
}

}  // namespace

PatientProfile profile_from_record(const corpus::CaseRecord& record,
                                   const corpus::CaseDescription& case_description,
                                   const corpus::LabelRegistry& registry) {
    PatientProfile profile;
    profile.case_id = record.case_id;
    profile.truth_coarse = case_description.truth_coarse;
    profile.truth_fine = case_description.truth_fine;
    profile.record = record;

    // Prompt hygiene: the simulator must not be able to quote its own
    // diagnosis, so diagnosis surface forms are scrubbed from the sections.
    const auto terms = synthgen::leak_terms(case_description.truth_coarse,
                                            case_description.truth_fine, registry);
    for (auto& section : profile.record.sections) {
        section = scrub_terms(section, terms);
    }
    const std::string& identification = profile.record.section("identification");
    const std::string& complaint = profile.record.section("chief_complaint");
    profile.persona = identification;
    if (util::normalize_for_match(complaint) !=
        util::normalize_for_match(corpus::kNotReported)) {
        profile.persona += " Main concern: " + complaint;
    }
    return profile;
}

std::string_view to_string(TerminationReason reason) {
    switch (reason) {
        case TerminationReason::end_marker:
            return "end_marker";
        case TerminationReason::round_budget:
            return "round_budget";
        case TerminationReason::error:
            return "error";
    }
    return "unknown";
}

std::optional<TerminationReason> termination_from_string(std::string_view s) {
    for (const TerminationReason r : {TerminationReason::end_marker,
                                      TerminationReason::round_budget,
                                      TerminationReason::error}) {
        if (s == to_string(r)) {
            return r;
        }
    }
    return std::nullopt;
}

SimTemplates SimTemplates::load(const std::filesystem::path& dir) {
    return SimTemplates{
        synthgen::PromptTemplate::load(dir / "interviewer_system.txt"),
        synthgen::PromptTemplate::load(dir / "patient_system.txt"),
    };
}

Transcript run_interview(const PatientProfile& profile, backend::Gateway& gateway,
                         const SessionConfig& config, const SimTemplates& templates) {
    if (config.max_rounds < 1) {
        throw std::invalid_argument("run_interview: max_rounds must be >= 1");
    }
    Transcript t;
    t.interviewer_backend_id = config.interviewer_backend_id;
    t.patient_backend_id = config.patient_backend_id;
    t.dialogue.case_id = profile.case_id;
    t.dialogue.stage = corpus::DialogueStage::polished;
    t.dialogue.provenance = {"simulation", config.interviewer_backend_id, config.seed};

    const std::string interviewer_system = templates.interviewer_system.render(
        {{"max_rounds", std::to_string(config.max_rounds)}, {"end_marker", config.end_marker}});
    const std::string patient_system = templates.patient_system.render(
        {{"persona", profile.persona},
         {"sections_block", synthgen::render_sections_block(profile.record)}});

    const auto append = [&](corpus::Speaker speaker, std::string text,
                            const std::string& backend_id) {
        corpus::Utterance u;
        u.speaker = speaker;
        u.text = std::move(text);
        u.index = static_cast<int>(t.dialogue.utterances.size());
        t.dialogue.utterances.push_back(std::move(u));
        t.utterance_backends.push_back(backend_id);
    };

    // Message views are rebuilt from the transcript each turn: backends are
    // stateless, the harness holds the session state.
    const auto interviewer_view = [&] {
        std::vector<backend::ChatMessage> msgs;
        msgs.push_back(backend::system_msg(interviewer_system));
        msgs.push_back(backend::user_msg("The client has arrived. Please begin the interview."));
        for (const auto& u : t.dialogue.utterances) {
            msgs.push_back(u.speaker == corpus::Speaker::psychiatrist
                               ? backend::assistant_msg(u.text)
                               : backend::user_msg(u.text));
        }
        return msgs;
    };
    const auto patient_view = [&] {
        std::vector<backend::ChatMessage> msgs;
        msgs.push_back(backend::system_msg(patient_system));
        for (const auto& u : t.dialogue.utterances) {
            msgs.push_back(u.speaker == corpus::Speaker::client
                               ? backend::assistant_msg(u.text)
                               : backend::user_msg(u.text));
        }
        return msgs;
    };

    try {
        for (int round = 0; round < config.max_rounds; ++round) {
            std::string question =
                gateway.complete(config.interviewer_backend_id, interviewer_view());
            const std::size_t marker_pos = question.find(config.end_marker);
            const bool ended = marker_pos != std::string::npos;
            if (ended) {
                question = util::replace_all(question, config.end_marker, "");
            }
            question = util::trim(question);
            // A marker-only reply leaves nothing to store; the transcript then
            // simply ends on the client turn.
            if (!question.empty()) {
                append(corpus::Speaker::psychiatrist, question, config.interviewer_backend_id);
            }
            if (ended) {
                t.end_marker_seen = true;
                t.terminated_by = TerminationReason::end_marker;
                return t;
            }
            const std::string reply = util::trim(
                gateway.complete(config.patient_backend_id, patient_view()));
            append(corpus::Speaker::client,
                   reply.empty() ? std::string("I am not sure what to say to that.") : reply,
                   config.patient_backend_id);
        }
        t.terminated_by = TerminationReason::round_budget;
    } catch (const backend::BackendError& e) {
        t.terminated_by = TerminationReason::error;
        t.error = e.what();
    }
    return t;
}

}  // namespace clinsynth::simulate
