#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace clinsynth::judge {

struct Dimension {
    std::string id;
    std::string name;
    std::string rubric;
};

/// The six interviewing-skill dimensions, fixed ids.
const std::vector<Dimension>& dimension_registry();

const Dimension* find_dimension(std::string_view id);

/// Resolves a list of ids against the registry; throws on an unknown id.
std::vector<Dimension> resolve_dimensions(const std::vector<std::string>& ids);

}  // namespace clinsynth::judge
