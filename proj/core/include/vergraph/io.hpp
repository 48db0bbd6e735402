#pragma once

// JSON and CSV interchange.
//
// Model spec:
//   {"model": "erg"|"gerg"|"coinflip"|"verg_finite", "n": int, "p": number,
//    "pmatrix": [[number]], "kernel": {"mu": [number], "phi": [[number]]}}
// Circle kernel:
//   {"type": "threshold", "p": number} | {"type": "sampled", "values": [number]}
// Distribution CSV: header "graph_id,probability", rows by increasing id.
//
// Numbers are written with 12 significant digits and '.' as the decimal
// separator regardless of the global locale.

#include "vergraph/approximate.hpp"
#include "vergraph/metrics.hpp"
#include "vergraph/models.hpp"
#include "vergraph/represent3.hpp"
#include "vergraph/spectral.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vergraph {

/// Parses and validates a model spec. `n_override`, when set, replaces (or
/// supplies) the "n" field. Errors name the offending field path.
ModelSpec parse_model_spec(std::string_view json_text, std::optional<int> n_override = std::nullopt);

std::string to_json(const ModelSpec& spec);

CircleKernel parse_circle_kernel(std::string_view json_text);

std::string to_json(const GraphId& g);
std::string to_json(const TvReport& report);
std::string to_json(const SpectrumSummary& summary);
std::string to_json(const ErgVerdict& verdict);
std::string to_json(const VrgApproxSpec& spec);
std::string to_json(const CycleRecovery& recovery);

/// Fixed 12-significant-digit rendering in the classic locale.
std::string format_number(double value);

void write_distribution_csv(std::ostream& out, const Distribution& d);

/// Reads a distribution CSV; n is inferred from the row count.
Distribution read_distribution_csv(std::istream& in);

void write_cycle_csv(std::ostream& out, const std::vector<CycleCountReport>& reports);

/// One graph id per line under the header "graph_id".
void write_sample_csv(std::ostream& out, const std::vector<GraphId>& samples);

} // namespace vergraph
