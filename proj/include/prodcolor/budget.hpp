#pragma once

#include <cstdint>

namespace prodcolor {

// Node budget for exhaustive searches. Every search-tree node spends one
// unit; when the budget runs dry the search stops and reports its best
// result so far as non-optimal instead of running away.
struct SearchBudget {
    std::uint64_t limit;
    std::uint64_t used = 0;

    explicit SearchBudget(std::uint64_t node_limit) : limit(node_limit) {}

    bool spend() {
        if (used >= limit) return false;
        ++used;
        return true;
    }
    bool exhausted() const { return used >= limit; }
};

inline constexpr std::uint64_t kDefaultSidonBudget = 10'000'000;
inline constexpr std::uint64_t kDefaultColorBudget = 50'000'000;

}  // namespace prodcolor
