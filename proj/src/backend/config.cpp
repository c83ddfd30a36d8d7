#include "clinsynth/backend/config.hpp"

#include "clinsynth/util/hash.hpp"
#include "clinsynth/util/text.hpp"

#include "json.hpp"

#include <cctype>
#include <stdexcept>

namespace clinsynth::backend {

std::string_view to_string(Role role) {
    switch (role) {
        case Role::system:
            return "system";
        case Role::user:
            return "user";
        case Role::assistant:
            return "assistant";
    }
    return "unknown";
}

void validate_messages(const std::vector<ChatMessage>& messages) {
    if (messages.empty()) {
        throw std::invalid_argument("messages must be non-empty");
    }
    for (const auto& m : messages) {
        if (m.role != Role::system && util::trim(m.content).empty()) {
            throw std::invalid_argument("user/assistant message content must be non-empty");
        }
    }
}

std::string_view to_string(BackendKind kind) {
    switch (kind) {
        case BackendKind::http_chat:
            return "http_chat";
        case BackendKind::mock:
            return "mock";
        case BackendKind::replay:
            return "replay";
    }
    return "unknown";
}

std::string BackendConfig::api_key_env_var() const {
    std::string var = "CLINSYNTH_";
    for (const char c : backend_id) {
        var.push_back(std::isalnum(static_cast<unsigned char>(c))
                          ? static_cast<char>(std::toupper(static_cast<unsigned char>(c)))
                          : '_');
    }
    var += "_KEY";
    return var;
}

void BackendConfig::validate() const {
    if (backend_id.empty()) {
        throw std::invalid_argument("backend_id must be non-empty");
    }
    if (temperature < 0.0) {
        throw std::invalid_argument("temperature must be >= 0");
    }
    if (max_output_tokens < 1) {
        throw std::invalid_argument("max_output_tokens must be positive");
    }
    if (max_retries < 0) {
        throw std::invalid_argument("max_retries must be non-negative");
    }
    if (max_in_flight < 1) {
        throw std::invalid_argument("max_in_flight must be >= 1");
    }
    if (kind == BackendKind::http_chat && endpoint.empty()) {
        throw std::invalid_argument("http_chat backend requires an endpoint");
    }
    if (kind == BackendKind::replay && cache_path.empty()) {
        throw std::invalid_argument("replay backend requires a cache path");
    }
}

std::string canonical_request(const BackendConfig& config,
                              const std::vector<ChatMessage>& messages) {
    nlohmann::json j;
    j["backend_id"] = config.backend_id;
    nlohmann::json msgs = nlohmann::json::array();
    for (const auto& m : messages) {
        msgs.push_back({{"content", m.content}, {"role", std::string(to_string(m.role))}});
    }
    j["messages"] = std::move(msgs);
    j["params"] = {{"max_output_tokens", config.max_output_tokens},
                   {"model", config.model_name},
                   {"temperature", config.temperature}};
    return j.dump();
}

std::string request_hash(const BackendConfig& config, const std::vector<ChatMessage>& messages) {
    return util::sha256_hex(canonical_request(config, messages));
}

}  // namespace clinsynth::backend
