#pragma once

#include "clinsynth/backend/config.hpp"
#include "clinsynth/backend/message.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace clinsynth::backend {

class BackendError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised by the replay backend when a request was never recorded.
class ReplayMiss : public BackendError {
public:
    using BackendError::BackendError;
};

struct CompletionResult {
    std::string text;
    int attempt = 1;
    std::int64_t latency_ms = 0;
};

class ChatBackend {
public:
    virtual ~ChatBackend() = default;

    /// Returns the assistant reply. Throws BackendError on failure.
    virtual CompletionResult complete(const std::vector<ChatMessage>& messages) = 0;

    virtual const BackendConfig& config() const = 0;
};

}  // namespace clinsynth::backend
