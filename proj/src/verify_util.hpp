#pragma once

#include <atomic>
#include <chrono>
#include <functional>
#include <thread>
#include <vector>

#include "kthue/certificate.hpp"
#include "kthue/morphism.hpp"
#include "kthue/repetition.hpp"

namespace kthue::detail {

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

/// Runs fn(0..count-1) on up to `jobs` threads. Tasks are claimed in index
/// order; once `stop` returns true no further tasks are claimed (claimed
/// tasks always run to completion).
inline void run_tasks(std::size_t jobs, std::size_t count,
                      const std::function<void(std::size_t)>& fn,
                      const std::function<bool()>& stop = {}) {
    if (count == 0) return;
    jobs = std::max<std::size_t>(1, std::min(jobs, count));
    if (jobs == 1) {
        for (std::size_t i = 0; i < count; ++i) {
            if (stop && stop()) break;
            fn(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            if (stop && stop()) break;
            const std::size_t i = next.fetch_add(1);
            if (i >= count) break;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

inline nlohmann::json witness_json(const RepetitionWitness& w) {
    return {{"d", w.d}, {"start", w.start}, {"half_length", w.half_length}};
}

inline nlohmann::json morphism_json(const Morphism& m) {
    nlohmann::json images = nlohmann::json::array();
    for (const Word& im : m.images()) images.push_back(format_word(im));
    return images;
}

/// First repetition (d <= k) whose last term is exactly `pos`, scanning d then
/// half-length in ascending order.
inline std::optional<RepetitionWitness> repetition_ending_at(const std::vector<Symbol>& w,
                                                             std::size_t k, std::size_t pos) {
    for (std::size_t d = 1; d <= k; ++d) {
        for (std::size_t t = 1; pos > (2 * t - 1) * d; ++t) {
            const std::size_t p = pos - (2 * t - 1) * d;
            bool equal = true;
            for (std::size_t i = t; i-- > 0;) {
                if (w[p - 1 + i * d] != w[p - 1 + (t + i) * d]) { equal = false; break; }
            }
            if (equal) return RepetitionWitness{d, p, t};
        }
    }
    return std::nullopt;
}

}  // namespace kthue::detail
