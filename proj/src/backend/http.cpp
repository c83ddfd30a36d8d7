#include "clinsynth/backend/http.hpp"

#include "clinsynth/util/hash.hpp"

#include "httplib.h"
#include "json.hpp"

#include <chrono>
#include <cstdlib>
#include <random>
#include <thread>

namespace clinsynth::backend {

using nlohmann::json;

namespace {

bool retryable_status(int status) {
    return status == 429 || (status >= 500 && status < 600);
}

}  // namespace

HttpChatBackend::HttpChatBackend(BackendConfig config) : config_(std::move(config)) {
    config_.validate();
    const std::string& url = config_.endpoint;
    std::size_t scheme_end = url.find("://");
    if (scheme_end == std::string::npos) {
        throw std::invalid_argument("endpoint must include a scheme: " + url);
    }
    const std::size_t path_start = url.find('/', scheme_end + 3);
    if (path_start == std::string::npos) {
        scheme_host_ = url;
        path_ = "/";
    } else {
        scheme_host_ = url.substr(0, path_start);
        path_ = url.substr(path_start);
    }
}

CompletionResult HttpChatBackend::complete(const std::vector<ChatMessage>& messages) {
    validate_messages(messages);

    json body;
    body["model"] = config_.model_name;
    body["temperature"] = config_.temperature;
    body["max_tokens"] = config_.max_output_tokens;
    json msgs = json::array();
    for (const auto& m : messages) {
        msgs.push_back({{"role", std::string(to_string(m.role))}, {"content", m.content}});
    }
    body["messages"] = std::move(msgs);
    const std::string payload = body.dump();

    httplib::Headers headers;
    const char* key = std::getenv(config_.api_key_env_var().c_str());
    if (key != nullptr && key[0] != '\0') {
        headers.emplace("Authorization", std::string("Bearer ") + key);
    }

    // Jitter source; no determinism requirement on the network path.
    std::mt19937_64 rng(util::derive_subseed(config_.seed, request_hash(config_, messages)));
    std::uniform_real_distribution<double> jitter(0.8, 1.2);

    const auto start = std::chrono::steady_clock::now();
    std::string last_error;
    for (int attempt = 1; attempt <= config_.max_retries + 1; ++attempt) {
        httplib::Client client(scheme_host_);
        client.set_connection_timeout(30);
        client.set_read_timeout(120);
        auto res = client.Post(path_, headers, payload, "application/json");
        if (res) {
            if (res->status == 200) {
                try {
                    const json parsed = json::parse(res->body);
                    if (parsed.contains("error")) {
                        throw BackendError("provider error: " + parsed["error"].dump());
                    }
                    CompletionResult out;
                    out.text =
                        parsed.at("choices").at(0).at("message").at("content").get<std::string>();
                    out.attempt = attempt;
                    out.latency_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                         std::chrono::steady_clock::now() - start)
                                         .count();
                    return out;
                } catch (const json::exception& e) {
                    throw BackendError(std::string("malformed provider response: ") + e.what());
                }
            }
            if (!retryable_status(res->status)) {
                throw BackendError("provider returned status " + std::to_string(res->status) +
                                   ": " + res->body);
            }
            last_error = "status " + std::to_string(res->status);
        } else {
            last_error = "connection error: " + httplib::to_string(res.error());
        }
        if (attempt <= config_.max_retries) {
            const double base = static_cast<double>(config_.backoff_base_ms);
            const double delay = base * static_cast<double>(1 << (attempt - 1)) * jitter(rng);
            std::this_thread::sleep_for(
                std::chrono::milliseconds(static_cast<std::int64_t>(delay)));
        }
    }
    throw BackendError("exhausted retries (" + std::to_string(config_.max_retries + 1) +
                       " attempts): " + last_error);
}

}  // namespace clinsynth::backend
