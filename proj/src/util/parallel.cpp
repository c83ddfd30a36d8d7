#include "clinsynth/util/parallel.hpp"

#include <atomic>
#include <algorithm>
#include <exception>
#include <thread>

namespace clinsynth::util {

std::vector<std::optional<std::string>> parallel_for(
    std::size_t n, std::size_t max_workers, const std::function<void(std::size_t)>& fn) {
    std::vector<std::optional<std::string>> errors(n);
    if (n == 0) {
        return errors;
    }
    const std::size_t workers = std::max<std::size_t>(1, std::min(max_workers, n));
    if (workers == 1) {
        for (std::size_t i = 0; i < n; ++i) {
            try {
                fn(i);
            } catch (const std::exception& e) {
                errors[i] = e.what();
            } catch (...) {
                errors[i] = "unknown error";
            }
        }
        return errors;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= n) {
                    return;
                }
                try {
                    fn(i);
                } catch (const std::exception& e) {
                    errors[i] = e.what();
                } catch (...) {
                    errors[i] = "unknown error";
                }
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }
    return errors;
}

}  // namespace clinsynth::util
