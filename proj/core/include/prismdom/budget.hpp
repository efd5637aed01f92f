#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace prismdom {

// Thrown when an exact search runs out of its allowance. Never accompanied by
// a partial answer.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The configuration space of a guard game is larger than the rank cap.
class RankCapExceeded : public BudgetExceeded {
public:
    using BudgetExceeded::BudgetExceeded;
};

struct SearchBudget {
    // Branching nodes allowed per top-level solver call.
    std::uint64_t nodes = 50'000'000;
};

class NodeCounter {
public:
    explicit NodeCounter(SearchBudget budget) : limit_(budget.nodes) {}

    void tick()
    {
        if (++used_ > limit_)
            throw BudgetExceeded("node budget of " + std::to_string(limit_) + " exceeded");
    }
    std::uint64_t used() const { return used_; }

private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
};

} // namespace prismdom
