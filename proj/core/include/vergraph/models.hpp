#pragma once

// Model specifications and exact distributions over the graph space G_n.

#include "vergraph/graph_space.hpp"
#include "vergraph/kernel.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

namespace vergraph {

/// Probability vector over G_n, indexed by GraphId::id.
struct Distribution {
    int n = 0;
    std::vector<double> probs;

    std::size_t size() const { return probs.size(); }
    double operator[](std::uint64_t id) const { return probs[id]; }
    double total() const;
};

/// Throws ValidationError unless probs has length 2^C(n,2), is nonnegative
/// and sums to 1 within `tol`.
void validate(const Distribution& d, double tol = 1e-10);

/// Symmetric n x n matrix of edge probabilities; the diagonal is ignored.
using EdgeProbabilityMatrix = std::vector<std::vector<double>>;

/// Erdos-Renyi G(n, p).
struct ErgModel {
    double p = 0.0;
};
/// Independent edges with pair-specific probabilities.
struct GergModel {
    EdgeProbabilityMatrix pmatrix;
};
/// All edges present with probability p, otherwise none.
struct CoinFlipModel {
    double p = 0.0;
};
/// Vertex-edge random graph over a finite type space.
struct FiniteVergModel {
    FiniteKernel kernel;
};

struct ModelSpec {
    int n = 0;
    std::variant<ErgModel, GergModel, CoinFlipModel, FiniteVergModel> model;
};

/// Checks probability ranges, matrix shape and symmetry.
void validate(const ModelSpec& spec);

/// Default per-call budget for the type-vector sum (b^n type vectors).
inline constexpr std::uint64_t kDefaultTypeVectorBudget = 1'000'000;

Distribution erg_distribution(int n, double p, int cap = kDefaultExactVertices);
Distribution gerg_distribution(int n, const EdgeProbabilityMatrix& pmatrix,
                               int cap = kDefaultExactVertices);
Distribution coinflip_distribution(int n, double p, int cap = kDefaultExactVertices);

/// Sum over type vectors t in [b]^n of prod mu(t_i) times the independent-edge
/// law with probabilities phi(t_i, t_j). Zero-mass types are dropped first.
Distribution verg_exact_distribution(int n, const FiniteKernel& kernel,
                                     int cap = kDefaultExactVertices);

Distribution exact_distribution(const ModelSpec& spec, int cap = kDefaultExactVertices);

/// Law of independent edges with probabilities `edge_probs` (edge-index
/// order), scaled by `weight` and added into `out` (length 2^edges).
void accumulate_independent_edges(std::span<const double> edge_probs, double weight,
                                  std::span<double> out);

/// Returns nothing when the GERG law is isomorphism-invariant (it is then an
/// ERG); otherwise an isomorphic pair with probabilities differing by > tol.
std::optional<std::pair<GraphId, GraphId>>
gerg_invariance_witness(int n, const EdgeProbabilityMatrix& pmatrix, double tol = 1e-12);

} // namespace vergraph
