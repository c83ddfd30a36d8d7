#include "clinsynth/backend/record_log.hpp"

#include "clinsynth/util/jsonl.hpp"

#include "json.hpp"

#include <stdexcept>

namespace clinsynth::backend {

using nlohmann::json;

RecordLogWriter::RecordLogWriter(const std::filesystem::path& path) : path_(path) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    out_.open(path, std::ios::binary | std::ios::app);
    if (!out_) {
        throw std::runtime_error("cannot open record log: " + path.string());
    }
}

void RecordLogWriter::append(const CompletionRecord& record) {
    const std::string line = json{{"request_hash", record.request_hash},
                                  {"response", record.response},
                                  {"latency_ms", record.latency_ms},
                                  {"attempt", record.attempt}}
                                 .dump();
    std::lock_guard lock(mu_);
    out_ << line << '\n';
    out_.flush();
}

std::vector<CompletionRecord> read_record_log(const std::filesystem::path& path) {
    std::vector<CompletionRecord> records;
    util::for_each_line(path, [&](int line_no, const std::string& line) {
        try {
            const json j = json::parse(line);
            CompletionRecord r;
            r.request_hash = j.at("request_hash").get<std::string>();
            r.response = j.at("response").get<std::string>();
            r.latency_ms = j.value("latency_ms", std::int64_t{0});
            r.attempt = j.value("attempt", 1);
            records.push_back(std::move(r));
        } catch (const std::exception& e) {
            throw std::runtime_error("record log line " + std::to_string(line_no) + ": " +
                                     e.what());
        }
    });
    return records;
}

}  // namespace clinsynth::backend
