#pragma once

#include <condition_variable>
#include <cstddef>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace clinsynth::util {

/// Counting semaphore with a runtime limit.
class Semaphore {
public:
    explicit Semaphore(std::size_t count) : count_(count) {}

    void acquire() {
        std::unique_lock lock(mu_);
        cv_.wait(lock, [&] { return count_ > 0; });
        --count_;
    }

    void release() {
        {
            std::lock_guard lock(mu_);
            ++count_;
        }
        cv_.notify_one();
    }

private:
    std::mutex mu_;
    std::condition_variable cv_;
    std::size_t count_;
};

class SemaphoreGuard {
public:
    explicit SemaphoreGuard(Semaphore& sem) : sem_(sem) { sem_.acquire(); }
    ~SemaphoreGuard() { sem_.release(); }
    SemaphoreGuard(const SemaphoreGuard&) = delete;
    SemaphoreGuard& operator=(const SemaphoreGuard&) = delete;

private:
    Semaphore& sem_;
};

/// Runs fn(0..n-1) on up to max_workers threads. Per-index exceptions are
/// captured and returned as messages at that index; results placement is the
/// caller's job (write into a pre-sized vector inside fn).
std::vector<std::optional<std::string>> parallel_for(
    std::size_t n, std::size_t max_workers, const std::function<void(std::size_t)>& fn);

}  // namespace clinsynth::util
