#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace twcert {

class BudgetExhausted : public std::runtime_error {
public:
    BudgetExhausted(const std::string & what, std::uint64_t limit) :
        std::runtime_error(what + ": work budget of " + std::to_string(limit) + " steps exhausted"),
        limit_(limit)
    {
    }

    [[nodiscard]] std::uint64_t limit() const { return limit_; }

private:
    std::uint64_t limit_;
};

/// Step counter for exhaustive searches. Exceeding the limit throws rather
/// than returning a partial answer.
class WorkBudget {
public:
    static constexpr std::uint64_t default_limit = 10'000'000;

    explicit WorkBudget(std::uint64_t limit = default_limit, std::string label = "search") :
        limit_(limit), label_(std::move(label))
    {
    }

    void spend(std::uint64_t steps = 1)
    {
        used_ += steps;
        if (used_ > limit_) {
            throw BudgetExhausted(label_, limit_);
        }
    }

    [[nodiscard]] std::uint64_t used() const { return used_; }
    [[nodiscard]] std::uint64_t limit() const { return limit_; }

private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
    std::string label_;
};

} // namespace twcert
