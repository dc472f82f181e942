#pragma once

#include <cstdint>
#include <optional>

namespace plum {

// Scorer-call accounting. calls_used never exceeds max_calls when set; a
// rejected record leaves the ledger untouched and the caller must stop and
// return its best-so-far.
struct BudgetLedger {
    std::optional<std::uint64_t> max_calls;
    std::uint64_t calls_used = 0;

    // true = recorded; false = increment would exceed max_calls (unchanged).
    bool record(std::uint64_t n) {
        if (max_calls && calls_used + n > *max_calls) return false;
        calls_used += n;
        return true;
    }

    bool exhausted() const { return max_calls && calls_used >= *max_calls; }
};

}  // namespace plum
