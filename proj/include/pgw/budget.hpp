#pragma once

#include <chrono>
#include <cstdint>
#include <string>

#include "pgw/errors.hpp"

namespace pgw {

// Shared resource meter. Search loops call tick() per elementary step
// (cell assignment, formula evaluation step); the counter is approximate
// by design, it only backs limits.
class Budget {
public:
    Budget() = default;

    static Budget with_steps(std::int64_t max_steps) {
        Budget b;
        b.max_steps_ = max_steps;
        return b;
    }

    void set_max_steps(std::int64_t n) { max_steps_ = n; }

    void set_deadline_ms(std::int64_t ms) {
        deadline_ = std::chrono::steady_clock::now() + std::chrono::milliseconds(ms);
        has_deadline_ = true;
    }

    std::int64_t steps() const { return steps_; }

    void tick(std::int64_t n = 1) {
        steps_ += n;
        if (max_steps_ >= 0 && steps_ > max_steps_)
            throw BudgetExceeded("step budget exhausted after " + std::to_string(steps_) + " steps");
        if (has_deadline_ && (steps_ & 0x3ff) == 0 &&
            std::chrono::steady_clock::now() > deadline_)
            throw BudgetExceeded("wall-clock budget exhausted");
    }

private:
    std::int64_t steps_ = 0;
    std::int64_t max_steps_ = -1;  // -1: unlimited
    bool has_deadline_ = false;
    std::chrono::steady_clock::time_point deadline_{};
};

}  // namespace pgw
