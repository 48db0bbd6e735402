#include "vergraph/models.hpp"

#include "vergraph/budget.hpp"

#include <cmath>
#include <sstream>
#include <string>

namespace vergraph {

namespace {

void check_probability(double p, const char* what)
{
    if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
        std::ostringstream os;
        os.precision(17);
        os << what << ": probability " << p << " outside [0, 1]";
        throw ValidationError(os.str());
    }
}

void check_vertices(int n, int cap)
{
    if (n < 1) {
        throw ValidationError("n must be >= 1, got " + std::to_string(n));
    }
    graph_count(n, std::min(cap, kMaxEnumerationVertices));
}

void check_pmatrix(int n, const EdgeProbabilityMatrix& pmatrix)
{
    if (static_cast<int>(pmatrix.size()) != n) {
        throw ValidationError("pmatrix: expected " + std::to_string(n) + " rows, got " +
                              std::to_string(pmatrix.size()));
    }
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(pmatrix[i].size()) != n) {
            throw ValidationError("pmatrix[" + std::to_string(i) + "]: expected " + std::to_string(n) +
                                  " columns");
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const std::string at = "pmatrix[" + std::to_string(i) + "][" + std::to_string(j) + "]";
            check_probability(pmatrix[i][j], at.c_str());
            if (pmatrix[i][j] != pmatrix[j][i]) {
                std::ostringstream os;
                os.precision(17);
                os << at << ": asymmetric (" << pmatrix[i][j] << " vs " << pmatrix[j][i] << ")";
                throw ValidationError(os.str());
            }
        }
    }
}

Distribution independent_edges(int n, std::span<const double> edge_probs)
{
    Distribution d{n, std::vector<double>(std::size_t{1} << pair_count(n), 0.0)};
    accumulate_independent_edges(edge_probs, 1.0, d.probs);
    return d;
}

} // namespace

double Distribution::total() const
{
    double s = 0.0;
    for (double p : probs) {
        s += p;
    }
    return s;
}

void validate(const Distribution& d, double tol)
{
    if (d.n < 1 || d.n > kMaxEnumerationVertices) {
        throw ValidationError("distribution: n=" + std::to_string(d.n) + " outside enumeration range");
    }
    if (d.probs.size() != (std::size_t{1} << pair_count(d.n))) {
        throw ValidationError("distribution: expected 2^" + std::to_string(pair_count(d.n)) +
                              " probabilities, got " + std::to_string(d.probs.size()));
    }
    for (std::size_t g = 0; g < d.probs.size(); ++g) {
        if (!(d.probs[g] >= 0.0)) {
            throw ValidationError("distribution: negative probability at graph " + std::to_string(g));
        }
    }
    if (std::abs(d.total() - 1.0) > tol) {
        throw ValidationError("distribution: probabilities do not sum to 1");
    }
}

void validate(const ModelSpec& spec)
{
    if (spec.n < 1) {
        throw ValidationError("n must be >= 1, got " + std::to_string(spec.n));
    }
    std::visit(
        [&](const auto& m) {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, ErgModel> || std::is_same_v<T, CoinFlipModel>) {
                check_probability(m.p, "p");
            } else if constexpr (std::is_same_v<T, GergModel>) {
                check_pmatrix(spec.n, m.pmatrix);
            }
        },
        spec.model);
}

void accumulate_independent_edges(std::span<const double> edge_probs, double weight,
                                  std::span<double> out)
{
    const std::size_t count = std::size_t{1} << edge_probs.size();
    if (out.size() != count) {
        throw ValidationError("accumulate_independent_edges: output length mismatch");
    }
    // Each edge splits every existing mass into bit-clear and bit-set halves.
    thread_local std::vector<double> scratch;
    scratch.assign(count, 0.0);
    scratch[0] = weight;
    for (std::size_t e = 0; e < edge_probs.size(); ++e) {
        const double q = edge_probs[e];
        const std::size_t bit = std::size_t{1} << e;
        for (std::size_t mask = 0; mask < bit; ++mask) {
            const double m = scratch[mask];
            scratch[mask | bit] = m * q;
            scratch[mask] = m * (1.0 - q);
        }
    }
    for (std::size_t g = 0; g < count; ++g) {
        out[g] += scratch[g];
    }
}

Distribution erg_distribution(int n, double p, int cap)
{
    check_vertices(n, cap);
    check_probability(p, "p");
    const std::vector<double> probs(pair_count(n), p);
    return independent_edges(n, probs);
}

Distribution gerg_distribution(int n, const EdgeProbabilityMatrix& pmatrix, int cap)
{
    check_vertices(n, cap);
    check_pmatrix(n, pmatrix);
    std::vector<double> probs;
    probs.reserve(pair_count(n));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            probs.push_back(pmatrix[i][j]);
        }
    }
    return independent_edges(n, probs);
}

Distribution coinflip_distribution(int n, double p, int cap)
{
    check_vertices(n, cap);
    check_probability(p, "p");
    Distribution d{n, std::vector<double>(std::size_t{1} << pair_count(n), 0.0)};
    if (n == 1) {
        d.probs[0] = 1.0;
        return d;
    }
    d.probs.back() += p;
    d.probs.front() += 1.0 - p;
    return d;
}

Distribution verg_exact_distribution(int n, const FiniteKernel& kernel, int cap)
{
    check_vertices(n, cap);
    const FiniteKernel k = kernel.reduced();
    const std::size_t b = k.types();
    require_budget(saturating_pow(b, static_cast<unsigned>(n)), kDefaultTypeVectorBudget,
                   "verg_exact_distribution type vectors");

    Distribution d{n, std::vector<double>(std::size_t{1} << pair_count(n), 0.0)};
    std::vector<std::size_t> types(n, 0);
    std::vector<double> edge_probs(pair_count(n));
    while (true) {
        double weight = 1.0;
        for (int i = 0; i < n; ++i) {
            weight *= k.mu(types[i]);
        }
        int e = 0;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                edge_probs[e++] = k.phi(types[i], types[j]);
            }
        }
        accumulate_independent_edges(edge_probs, weight, d.probs);

        int pos = n - 1;
        while (pos >= 0 && ++types[pos] == b) {
            types[pos] = 0;
            --pos;
        }
        if (pos < 0) {
            break;
        }
    }
    return d;
}

Distribution exact_distribution(const ModelSpec& spec, int cap)
{
    validate(spec);
    return std::visit(
        [&](const auto& m) -> Distribution {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, ErgModel>) {
                return erg_distribution(spec.n, m.p, cap);
            } else if constexpr (std::is_same_v<T, GergModel>) {
                return gerg_distribution(spec.n, m.pmatrix, cap);
            } else if constexpr (std::is_same_v<T, CoinFlipModel>) {
                return coinflip_distribution(spec.n, m.p, cap);
            } else {
                return verg_exact_distribution(spec.n, m.kernel, cap);
            }
        },
        spec.model);
}

std::optional<std::pair<GraphId, GraphId>>
gerg_invariance_witness(int n, const EdgeProbabilityMatrix& pmatrix, double tol)
{
    const Distribution d = gerg_distribution(n, pmatrix);
    const auto& canon = canonical_table(n);
    // First member (smallest id) of each class; the class minimum is its
    // canonical id, which is always visited first.
    for (std::uint64_t g = 0; g < d.size(); ++g) {
        const std::uint64_t rep = canon[g];
        if (std::abs(d.probs[g] - d.probs[rep]) > tol) {
            return std::pair{GraphId{n, rep}, GraphId{n, g}};
        }
    }
    return std::nullopt;
}

} // namespace vergraph
