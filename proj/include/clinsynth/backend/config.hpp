#pragma once

#include "clinsynth/backend/message.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace clinsynth::backend {

enum class BackendKind { http_chat, mock, replay };

std::string_view to_string(BackendKind kind);

struct BackendConfig {
    std::string backend_id;
    BackendKind kind = BackendKind::mock;
    std::string endpoint;  // http_chat only
    std::string model_name;
    double temperature = 0.0;
    int max_output_tokens = 1024;
    int max_retries = 2;
    int max_in_flight = 4;
    std::uint64_t seed = 0;   // mock only
    std::string cache_path;   // replay source (required for replay kind)
    int backoff_base_ms = 500;

    /// Env var carrying the API key for http_chat: CLINSYNTH_<BACKEND_ID>_KEY.
    std::string api_key_env_var() const;

    /// Throws std::invalid_argument on violated invariants.
    void validate() const;
};

/// Canonical serialization of a request: sorted-key JSON over backend id,
/// messages, and sampling params. Stable across runs and platforms, so it
/// can key the record/replay cache.
std::string canonical_request(const BackendConfig& config,
                              const std::vector<ChatMessage>& messages);

/// SHA-256 hex of canonical_request.
std::string request_hash(const BackendConfig& config, const std::vector<ChatMessage>& messages);

}  // namespace clinsynth::backend
