#include "vergraph/metrics.hpp"

#include "vergraph/budget.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace vergraph {

namespace {

void check_same_space(const Distribution& p1, const Distribution& p2)
{
    if (p1.n != p2.n || p1.size() != p2.size()) {
        throw ValidationError("distributions live on different graph spaces (n=" +
                              std::to_string(p1.n) + " vs n=" + std::to_string(p2.n) + ")");
    }
}

} // namespace

double tv_distance(const Distribution& p1, const Distribution& p2)
{
    check_same_space(p1, p2);
    double sum = 0.0;
    for (std::size_t g = 0; g < p1.size(); ++g) {
        sum += std::abs(p1.probs[g] - p2.probs[g]);
    }
    return 0.5 * sum;
}

TvReport tv_witness(const Distribution& p1, const Distribution& p2)
{
    TvReport report{tv_distance(p1, p2), {}};
    for (std::size_t g = 0; g < p1.size(); ++g) {
        if (p1.probs[g] > p2.probs[g]) {
            report.witness.push_back(g);
        }
    }
    return report;
}

double max_event_discrepancy(const Distribution& p1, const Distribution& p2)
{
    check_same_space(p1, p2);
    if (p1.n > 3) {
        throw BudgetExceeded("max_event_discrepancy: exhaustive events only for n <= 3");
    }
    const std::size_t graphs = p1.size();
    double best = 0.0;
    for (std::uint64_t event = 0; event < (std::uint64_t{1} << graphs); ++event) {
        double diff = 0.0;
        for (std::uint64_t rest = event; rest != 0; rest &= rest - 1) {
            const int g = std::countr_zero(rest);
            diff += p1.probs[g] - p2.probs[g];
        }
        best = std::max(best, std::abs(diff));
    }
    return best;
}

bool is_isomorphism_invariant(const Distribution& p, double tol)
{
    const auto& canon = canonical_table(p.n);
    for (std::size_t g = 0; g < p.size(); ++g) {
        if (std::abs(p.probs[g] - p.probs[canon[g]]) > tol) {
            return false;
        }
    }
    return true;
}

NearestErg nearest_erg(const Distribution& p, double grid_step)
{
    if (!(grid_step > 0.0) || grid_step > 1.0) {
        throw ValidationError("nearest_erg: grid_step must lie in (0, 1]");
    }
    // Grids that divide [0, 1] evenly are generated as s / steps so that
    // decimal steps land on their exact decimal points.
    const double ratio = 1.0 / grid_step;
    const bool even = std::abs(ratio - std::round(ratio)) <= 1e-9 * ratio;
    const auto steps = static_cast<std::int64_t>(even ? std::llround(ratio) : std::ceil(ratio));
    std::vector<int> edges(p.size());
    for (std::size_t g = 0; g < p.size(); ++g) {
        edges[g] = std::popcount(g);
    }
    const int total_edges = pair_count(p.n);

    NearestErg best{0.0, 2.0};
    for (std::int64_t s = 0; s <= steps; ++s) {
        const double q = s == steps ? 1.0
                         : even     ? static_cast<double>(s) / static_cast<double>(steps)
                                    : static_cast<double>(s) * grid_step;
        double sum = 0.0;
        for (std::size_t g = 0; g < p.size(); ++g) {
            const double erg = std::pow(q, edges[g]) * std::pow(1.0 - q, total_edges - edges[g]);
            sum += std::abs(p.probs[g] - erg);
        }
        const double d = 0.5 * sum;
        if (d < best.distance) {
            best = {q, d};
        }
    }
    return best;
}

} // namespace vergraph
