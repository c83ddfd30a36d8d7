#pragma once

#include "clinsynth/backend/backend.hpp"

#include <unordered_map>

namespace clinsynth::backend {

/// Serves responses from a previously recorded completion log, keyed by
/// request hash. No network use; a request that was never recorded throws
/// ReplayMiss.
class ReplayBackend : public ChatBackend {
public:
    explicit ReplayBackend(BackendConfig config);

    CompletionResult complete(const std::vector<ChatMessage>& messages) override;
    const BackendConfig& config() const override { return config_; }

    std::size_t size() const { return responses_.size(); }

private:
    BackendConfig config_;
    std::unordered_map<std::string, std::string> responses_;
};

}  // namespace clinsynth::backend
