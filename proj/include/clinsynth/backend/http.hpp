#pragma once

#include "clinsynth/backend/backend.hpp"

namespace clinsynth::backend {

/// Chat-completions HTTP client: messages array in, first choice message out.
/// Transient failures (connection errors, 429, 5xx) are retried up to
/// max_retries with exponential backoff (base 500 ms, factor 2, jitter
/// +-20%). The API key is read from CLINSYNTH_<BACKEND_ID>_KEY; config files
/// never carry keys.
class HttpChatBackend : public ChatBackend {
public:
    explicit HttpChatBackend(BackendConfig config);

    CompletionResult complete(const std::vector<ChatMessage>& messages) override;
    const BackendConfig& config() const override { return config_; }

private:
    BackendConfig config_;
    std::string scheme_host_;
    std::string path_;
};

}  // namespace clinsynth::backend
