#include "clinsynth/backend/replay.hpp"

#include "clinsynth/backend/record_log.hpp"

namespace clinsynth::backend {

ReplayBackend::ReplayBackend(BackendConfig config) : config_(std::move(config)) {
    config_.validate();
    // Hashes embed backend_id and sampling params, so a replay config must
    // keep the recorded backend's identity (only `kind` changes).
    for (const auto& record : read_record_log(config_.cache_path)) {
        responses_[record.request_hash] = record.response;
    }
}

CompletionResult ReplayBackend::complete(const std::vector<ChatMessage>& messages) {
    validate_messages(messages);
    const std::string hash = request_hash(config_, messages);
    const auto it = responses_.find(hash);
    if (it == responses_.end()) {
        throw ReplayMiss("replay miss for request " + hash.substr(0, 12) + "... in " +
                         config_.cache_path);
    }
    CompletionResult out;
    out.text = it->second;
    out.attempt = 1;
    out.latency_ms = 0;
    return out;
}

}  // namespace clinsynth::backend
