#include "vergraph/budget.hpp"

#include <charconv>
#include <cstdlib>
#include <limits>

namespace vergraph {

std::uint64_t budget_limit(std::uint64_t default_limit)
{
    const char* env = std::getenv(kBudgetEnvVar);
    if (env == nullptr || *env == '\0') {
        return default_limit;
    }
    std::uint64_t value = 0;
    const std::string_view text(env);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) {
        throw ValidationError(std::string(kBudgetEnvVar) + " must be a positive integer, got '" +
                              std::string(text) + "'");
    }
    return value;
}

void require_budget(std::uint64_t cost, std::uint64_t default_limit, std::string_view what)
{
    const std::uint64_t limit = budget_limit(default_limit);
    if (cost > limit) {
        throw BudgetExceeded(std::string(what) + ": " + std::to_string(cost) +
                             " iterations exceed budget " + std::to_string(limit));
    }
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b)
{
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
        return std::numeric_limits<std::uint64_t>::max();
    }
    return a * b;
}

std::uint64_t saturating_pow(std::uint64_t base, unsigned exp)
{
    std::uint64_t out = 1;
    for (unsigned i = 0; i < exp; ++i) {
        out = saturating_mul(out, base);
    }
    return out;
}

} // namespace vergraph
