#pragma once

#include "vergraph/models.hpp"

#include <cstdint>
#include <vector>

namespace vergraph {

/// Total variation distance with the event realizing it.
struct TvReport {
    double distance = 0.0;
    /// {G : P1(G) > P2(G)} in increasing id order; ties are excluded.
    std::vector<std::uint64_t> witness;
};

/// 1/2 sum_G |P1(G) - P2(G)|.
double tv_distance(const Distribution& p1, const Distribution& p2);

TvReport tv_witness(const Distribution& p1, const Distribution& p2);

/// max over all 2^|G_n| events A of |P1(A) - P2(A)|, by exhaustion (n <= 3).
double max_event_discrepancy(const Distribution& p1, const Distribution& p2);

/// True iff |P(G) - P(H)| <= tol for every isomorphic pair G, H.
bool is_isomorphism_invariant(const Distribution& p, double tol = 1e-12);

struct NearestErg {
    double p = 0.0;
    double distance = 0.0;
};

/// Minimizes tv_distance(P, G(n, p)) over p in {0, step, 2 step, ..., 1};
/// the smallest minimizing p wins ties.
NearestErg nearest_erg(const Distribution& p, double grid_step);

} // namespace vergraph
