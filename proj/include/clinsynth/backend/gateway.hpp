#pragma once

#include "clinsynth/backend/backend.hpp"
#include "clinsynth/backend/record_log.hpp"
#include "clinsynth/util/parallel.hpp"

#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace clinsynth::backend {

struct BatchItemError {
    std::size_t index = 0;
    std::string message;
};

struct BatchResult {
    std::vector<std::string> texts;  // empty at failed indices
    std::vector<BatchItemError> errors;

    bool ok() const { return errors.empty(); }
};

/// Uniform entry point to every configured chat backend. Thread-safe:
/// callers may issue concurrent completes; a per-backend semaphore caps
/// in-flight requests at max_in_flight, and the optional record log is
/// appended behind a single serializing writer.
class Gateway {
public:
    explicit Gateway(const std::vector<BackendConfig>& configs);

    ChatBackend& backend(const std::string& backend_id);

    /// Appends every successful completion (any backend) to a JSONL log that
    /// the replay backend can serve later.
    void enable_recording(const std::filesystem::path& log_path);

    std::string complete(const std::string& backend_id,
                         const std::vector<ChatMessage>& messages);

    /// Results in input order regardless of completion order; per-item errors
    /// are collected, never thrown.
    BatchResult complete_batch(const std::string& backend_id,
                               const std::vector<std::vector<ChatMessage>>& requests);

    std::vector<std::string> backend_ids() const;

private:
    struct Entry {
        std::unique_ptr<ChatBackend> backend;
        std::unique_ptr<util::Semaphore> slots;
    };
    std::map<std::string, Entry> entries_;
    std::unique_ptr<RecordLogWriter> recorder_;
};

std::unique_ptr<ChatBackend> make_backend(const BackendConfig& config);

}  // namespace clinsynth::backend
