#include "clinsynth/judge/dimensions.hpp"

#include <stdexcept>

namespace clinsynth::judge {

const std::vector<Dimension>& dimension_registry() {
    static const std::vector<Dimension> registry = {
        {"history_of_present_illness", "History of present illness",
         "Which psychiatrist inquired more thoroughly about the onset, course, and impact of "
         "the client's current difficulties?"},
        {"medical_history", "Medical history",
         "Which psychiatrist better covered the client's medical and psychiatric history, "
         "including treatments and medication?"},
        {"personal_social_history", "Personal and social history",
         "Which psychiatrist gathered more about the client's work, relationships, and living "
         "situation?"},
        {"family_history_of_mental_disorder", "Family history of mental disorder",
         "Which psychiatrist better explored mental-disorder history in the client's family?"},
        {"warns_interview_over", "Warns that interview is over",
         "Which psychiatrist gave a clearer warning that the interview was concluding?"},
        {"conclusion_with_appreciation", "Conclusion with interest and appreciation",
         "Which psychiatrist closed with more interest in and appreciation toward the client?"},
    };
    return registry;
}

const Dimension* find_dimension(std::string_view id) {
    for (const auto& d : dimension_registry()) {
        if (d.id == id) {
            return &d;
        }
    }
    return nullptr;
}

std::vector<Dimension> resolve_dimensions(const std::vector<std::string>& ids) {
    std::vector<Dimension> out;
    out.reserve(ids.size());
    for (const auto& id : ids) {
        const Dimension* d = find_dimension(id);
        if (d == nullptr) {
            throw std::invalid_argument("unknown judging dimension: " + id);
        }
        out.push_back(*d);
    }
    return out;
}

}  // namespace clinsynth::judge
