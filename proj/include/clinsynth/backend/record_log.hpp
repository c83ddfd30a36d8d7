#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <string>
#include <vector>

namespace clinsynth::backend {

struct CompletionRecord {
    std::string request_hash;
    std::string response;
    std::int64_t latency_ms = 0;
    int attempt = 1;

    bool operator==(const CompletionRecord&) const = default;
};

/// Append-only JSONL writer behind a single serializing mutex.
class RecordLogWriter {
public:
    explicit RecordLogWriter(const std::filesystem::path& path);

    void append(const CompletionRecord& record);

    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
    std::ofstream out_;
    std::mutex mu_;
};

std::vector<CompletionRecord> read_record_log(const std::filesystem::path& path);

}  // namespace clinsynth::backend
