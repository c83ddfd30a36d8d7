#pragma once

#include <filesystem>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace clinsynth::synthgen {

class TemplateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Prompt text with {snake_case} placeholders. Every placeholder found in
/// the text is required: rendering fails unless all are bound, and no
/// unbound placeholder may survive in the output.
class PromptTemplate {
public:
    PromptTemplate(std::string id, std::string text);

    /// Loads from a UTF-8 file; the id is the filename stem.
    static PromptTemplate load(const std::filesystem::path& path);

    const std::string& id() const { return id_; }
    const std::string& text() const { return text_; }
    const std::set<std::string>& required_placeholders() const { return required_; }

    std::string render(const std::map<std::string, std::string>& bindings) const;

private:
    std::string id_;
    std::string text_;
    std::set<std::string> required_;
};

}  // namespace clinsynth::synthgen
