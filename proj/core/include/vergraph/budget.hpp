#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace vergraph {

/// Input violates a documented precondition or invariant.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An enumeration would exceed its iteration budget or the vertex cap.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Environment variable that, when set to a positive integer, replaces every
/// default enumeration budget. Unit: innermost iterations.
inline constexpr const char* kBudgetEnvVar = "VERGRAPH_BUDGET";

/// Returns the VERGRAPH_BUDGET override if set, else `default_limit`.
std::uint64_t budget_limit(std::uint64_t default_limit);

/// Throws BudgetExceeded when `cost` exceeds budget_limit(default_limit).
void require_budget(std::uint64_t cost, std::uint64_t default_limit, std::string_view what);

/// a * b clamped to UINT64_MAX.
std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b);

/// base^exp clamped to UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t base, unsigned exp);

} // namespace vergraph
