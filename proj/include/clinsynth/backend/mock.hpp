#pragma once

#include "clinsynth/backend/backend.hpp"

#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace clinsynth::backend {

/// Scripted response rule: first rule whose `contains` substring appears in
/// the request (roles + contents concatenated) wins. `responses` are consumed
/// in order across calls (the last one repeats); a non-empty `fail` throws
/// instead.
struct MockRule {
    std::string contains;
    std::vector<std::string> responses;
    std::string fail;
};

/// Deterministic offline stand-in for a chat model. Two layers: scripted
/// substring rules, then a seeded generator that recognizes each pipeline
/// prompt by its instruction text and emits schema-valid output for it.
/// Fallback responses are a pure function of (seed, request).
class MockBackend : public ChatBackend {
public:
    explicit MockBackend(BackendConfig config);

    CompletionResult complete(const std::vector<ChatMessage>& messages) override;
    const BackendConfig& config() const override { return config_; }

    void add_rule(MockRule rule);
    void clear_rules();

    /// Test instrumentation.
    void set_artificial_delay_ms(int ms) { artificial_delay_ms_ = ms; }
    void set_capture_requests(bool on) { capture_requests_ = on; }
    int call_count() const { return calls_.load(); }
    int max_observed_in_flight() const { return max_in_flight_seen_.load(); }
    std::vector<std::vector<ChatMessage>> captured_requests() const;

private:
    std::string scripted_or_generated(const std::vector<ChatMessage>& messages);

    BackendConfig config_;
    std::vector<MockRule> rules_;
    std::vector<std::size_t> rule_cursor_;
    mutable std::mutex mu_;
    std::vector<std::vector<ChatMessage>> captured_;
    std::atomic<int> calls_{0};
    std::atomic<int> in_flight_{0};
    std::atomic<int> max_in_flight_seen_{0};
    std::atomic<bool> capture_requests_{false};
    std::atomic<int> artificial_delay_ms_{0};
};

}  // namespace clinsynth::backend
