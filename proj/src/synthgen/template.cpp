#include "clinsynth/synthgen/template.hpp"

#include "clinsynth/util/jsonl.hpp"

#include <regex>

namespace clinsynth::synthgen {

namespace {

const std::regex kPlaceholder(R"(\{([a-z][a-z0-9_]*)\})");

std::set<std::string> scan_placeholders(const std::string& text) {
    std::set<std::string> found;
    for (auto it = std::sregex_iterator(text.begin(), text.end(), kPlaceholder);
         it != std::sregex_iterator(); ++it) {
        found.insert((*it)[1].str());
    }
    return found;
}

}  // namespace

PromptTemplate::PromptTemplate(std::string id, std::string text)
    : id_(std::move(id)), text_(std::move(text)), required_(scan_placeholders(text_)) {}

PromptTemplate PromptTemplate::load(const std::filesystem::path& path) {
    return PromptTemplate(path.stem().string(), util::read_file(path));
}

std::string PromptTemplate::render(const std::map<std::string, std::string>& bindings) const {
    for (const auto& name : required_) {
        if (bindings.find(name) == bindings.end()) {
            throw TemplateError("template '" + id_ + "': unbound placeholder {" + name + "}");
        }
    }
    std::string out;
    out.reserve(text_.size());
    std::size_t pos = 0;
    while (pos < text_.size()) {
        const std::size_t open = text_.find('{', pos);
        if (open == std::string::npos) {
            out.append(text_, pos, std::string::npos);
            break;
        }
        out.append(text_, pos, open - pos);
        const std::size_t close = text_.find('}', open);
        std::string name;
        if (close != std::string::npos) {
            name = text_.substr(open + 1, close - open - 1);
        }
        const auto binding = bindings.find(name);
        if (close != std::string::npos && binding != bindings.end()) {
            out.append(binding->second);
            pos = close + 1;
        } else {
            out.push_back('{');
            pos = open + 1;
        }
    }
    std::smatch leftover;
    if (std::regex_search(out, leftover, kPlaceholder)) {
        throw TemplateError("template '" + id_ + "': placeholder {" + leftover[1].str() +
                            "} survived rendering");
    }
    return out;
}

}  // namespace clinsynth::synthgen
