#include "clinsynth/backend/gateway.hpp"

#include "clinsynth/backend/http.hpp"
#include "clinsynth/backend/mock.hpp"
#include "clinsynth/backend/replay.hpp"

#include <stdexcept>

namespace clinsynth::backend {

std::unique_ptr<ChatBackend> make_backend(const BackendConfig& config) {
    config.validate();
    switch (config.kind) {
        case BackendKind::mock:
            return std::make_unique<MockBackend>(config);
        case BackendKind::http_chat:
            return std::make_unique<HttpChatBackend>(config);
        case BackendKind::replay:
            return std::make_unique<ReplayBackend>(config);
    }
    throw std::invalid_argument("unknown backend kind");
}

Gateway::Gateway(const std::vector<BackendConfig>& configs) {
    for (const auto& config : configs) {
        if (entries_.count(config.backend_id) > 0) {
            throw std::invalid_argument("duplicate backend_id: " + config.backend_id);
        }
        Entry entry;
        entry.backend = make_backend(config);
        entry.slots = std::make_unique<util::Semaphore>(
            static_cast<std::size_t>(config.max_in_flight));
        entries_.emplace(config.backend_id, std::move(entry));
    }
}

ChatBackend& Gateway::backend(const std::string& backend_id) {
    const auto it = entries_.find(backend_id);
    if (it == entries_.end()) {
        throw std::invalid_argument("unknown backend_id: " + backend_id);
    }
    return *it->second.backend;
}

void Gateway::enable_recording(const std::filesystem::path& log_path) {
    recorder_ = std::make_unique<RecordLogWriter>(log_path);
}

std::string Gateway::complete(const std::string& backend_id,
                              const std::vector<ChatMessage>& messages) {
    const auto it = entries_.find(backend_id);
    if (it == entries_.end()) {
        throw std::invalid_argument("unknown backend_id: " + backend_id);
    }
    Entry& entry = it->second;
    util::SemaphoreGuard guard(*entry.slots);
    const CompletionResult result = entry.backend->complete(messages);
    if (recorder_) {
        CompletionRecord record;
        record.request_hash = request_hash(entry.backend->config(), messages);
        record.response = result.text;
        record.latency_ms = result.latency_ms;
        record.attempt = result.attempt;
        recorder_->append(record);
    }
    return result.text;
}

BatchResult Gateway::complete_batch(const std::string& backend_id,
                                    const std::vector<std::vector<ChatMessage>>& requests) {
    if (requests.empty()) {
        throw std::invalid_argument("complete_batch: empty request list");
    }
    const ChatBackend& be = backend(backend_id);
    BatchResult result;
    result.texts.assign(requests.size(), "");
    const auto errors = util::parallel_for(
        requests.size(), static_cast<std::size_t>(be.config().max_in_flight),
        [&](std::size_t i) { result.texts[i] = complete(backend_id, requests[i]); });
    for (std::size_t i = 0; i < errors.size(); ++i) {
        if (errors[i]) {
            result.errors.push_back({i, *errors[i]});
        }
    }
    return result;
}

std::vector<std::string> Gateway::backend_ids() const {
    std::vector<std::string> ids;
    ids.reserve(entries_.size());
    for (const auto& [id, entry] : entries_) {
        ids.push_back(id);
    }
    return ids;
}

}  // namespace clinsynth::backend
