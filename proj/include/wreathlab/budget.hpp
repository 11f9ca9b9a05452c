#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <memory>

#include "wreathlab/errors.hpp"

namespace wreathlab {

/// Cooperative cancellation. Long-running loops call poll() every few
/// hundred iterations; the token trips either when the flag is set or when
/// the deadline passes. Copies share the flag.
class CancelToken {
public:
    CancelToken() = default;

    static CancelToken with_deadline(std::chrono::steady_clock::duration timeout) {
        CancelToken t;
        t.deadline_ = std::chrono::steady_clock::now() + timeout;
        t.has_deadline_ = true;
        return t;
    }

    void cancel() const { flag_->store(true, std::memory_order_relaxed); }

    bool cancelled() const {
        if (flag_->load(std::memory_order_relaxed)) return true;
        return has_deadline_ && std::chrono::steady_clock::now() > deadline_;
    }

    void poll() const {
        if (cancelled()) throw Cancelled("computation cancelled");
    }

private:
    std::shared_ptr<std::atomic<bool>> flag_ = std::make_shared<std::atomic<bool>>(false);
    std::chrono::steady_clock::time_point deadline_{};
    bool has_deadline_ = false;
};

/// Resource limits threaded through every operation that enumerates or
/// searches. Exceeding a cap raises CapExceeded; exhausting a search budget
/// is reported in certificates, never silently truncated.
struct Budget {
    std::uint64_t element_cap = std::uint64_t(1) << 20;  // max enumerated group order
    int degree_cap = 64;                                 // max permutation degree
    std::uint64_t brute_cap = 512;                       // max order for brute-force ops
    std::uint64_t tuple_budget = 1'000'000;              // generator-image tuples per search
    std::uint64_t seed = 0x5eed5eedULL;                  // for sampled (non-exhaustive) checks
    CancelToken token{};
};

inline const Budget& default_budget() {
    static const Budget b{};
    return b;
}

}  // namespace wreathlab
