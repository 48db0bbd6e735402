#include "vergraph/io.hpp"

#include "vergraph/budget.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdlib>
#include <istream>
#include <locale>
#include <ostream>
#include <sstream>

namespace vergraph {

using nlohmann::json;

namespace {

double rounded(double v)
{
    return std::strtod(format_number(v).c_str(), nullptr);
}

json rounded_array(const std::vector<double>& values)
{
    json arr = json::array();
    for (double v : values) {
        arr.push_back(rounded(v));
    }
    return arr;
}

double number_at(const json& j, const std::string& path)
{
    if (!j.is_number()) {
        throw ValidationError(path + ": expected a number");
    }
    return j.get<double>();
}

std::vector<double> vector_at(const json& j, const std::string& path)
{
    if (!j.is_array()) {
        throw ValidationError(path + ": expected an array");
    }
    std::vector<double> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        out.push_back(number_at(j[i], path + "[" + std::to_string(i) + "]"));
    }
    return out;
}

std::vector<std::vector<double>> matrix_at(const json& j, const std::string& path)
{
    if (!j.is_array()) {
        throw ValidationError(path + ": expected an array of rows");
    }
    std::vector<std::vector<double>> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        out.push_back(vector_at(j[i], path + "[" + std::to_string(i) + "]"));
    }
    return out;
}

const json& field(const json& j, const char* name)
{
    if (!j.contains(name)) {
        throw ValidationError(std::string(name) + ": missing field");
    }
    return j.at(name);
}

json parse_json(std::string_view text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("malformed JSON: ") + e.what());
    }
}

FiniteKernel kernel_from_json(const json& k)
{
    if (!k.is_object()) {
        throw ValidationError("kernel: expected an object");
    }
    auto mu = vector_at(field(k, "mu"), "kernel.mu");
    auto phi = matrix_at(field(k, "phi"), "kernel.phi");
    try {
        return FiniteKernel(std::move(mu), phi);
    } catch (const ValidationError& e) {
        throw ValidationError(std::string("kernel.") + e.what());
    }
}

json kernel_to_json(const FiniteKernel& k)
{
    json phi = json::array();
    for (const auto& row : k.phi_rows()) {
        phi.push_back(row);
    }
    return {{"mu", std::vector<double>(k.mu().begin(), k.mu().end())}, {"phi", phi}};
}

} // namespace

std::string format_number(double value)
{
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os.precision(12);
    os << value;
    return os.str();
}

ModelSpec parse_model_spec(std::string_view json_text, std::optional<int> n_override)
{
    const json j = parse_json(json_text);
    if (!j.is_object()) {
        throw ValidationError("model spec: expected a JSON object");
    }
    const json& model = field(j, "model");
    if (!model.is_string()) {
        throw ValidationError("model: expected a string");
    }
    ModelSpec spec;
    if (n_override) {
        spec.n = *n_override;
    } else {
        const json& n = field(j, "n");
        if (!n.is_number_integer()) {
            throw ValidationError("n: expected an integer");
        }
        spec.n = n.get<int>();
    }

    const std::string kind = model.get<std::string>();
    if (kind == "erg") {
        spec.model = ErgModel{number_at(field(j, "p"), "p")};
    } else if (kind == "coinflip") {
        spec.model = CoinFlipModel{number_at(field(j, "p"), "p")};
    } else if (kind == "gerg") {
        spec.model = GergModel{matrix_at(field(j, "pmatrix"), "pmatrix")};
    } else if (kind == "verg_finite") {
        spec.model = FiniteVergModel{kernel_from_json(field(j, "kernel"))};
    } else {
        throw ValidationError("model: unknown variant '" + kind + "'");
    }
    validate(spec);
    return spec;
}

std::string to_json(const ModelSpec& spec)
{
    json j{{"n", spec.n}};
    std::visit(
        [&](const auto& m) {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, ErgModel>) {
                j["model"] = "erg";
                j["p"] = m.p;
            } else if constexpr (std::is_same_v<T, CoinFlipModel>) {
                j["model"] = "coinflip";
                j["p"] = m.p;
            } else if constexpr (std::is_same_v<T, GergModel>) {
                j["model"] = "gerg";
                j["pmatrix"] = m.pmatrix;
            } else {
                j["model"] = "verg_finite";
                j["kernel"] = kernel_to_json(m.kernel);
            }
        },
        spec.model);
    return j.dump();
}

CircleKernel parse_circle_kernel(std::string_view json_text)
{
    const json j = parse_json(json_text);
    if (!j.is_object()) {
        throw ValidationError("circle kernel: expected a JSON object");
    }
    const json& type = field(j, "type");
    if (type == "threshold") {
        const double p = number_at(field(j, "p"), "p");
        if (!(p >= 0.0 && p <= 1.0)) {
            throw ValidationError("p: probability outside [0, 1]");
        }
        return ThresholdCircle{p};
    }
    if (type == "sampled") {
        auto values = vector_at(field(j, "values"), "values");
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (!(values[i] >= 0.0 && values[i] <= 1.0)) {
                throw ValidationError("values[" + std::to_string(i) + "]: outside [0, 1]");
            }
        }
        return SampledCircle{std::move(values)};
    }
    throw ValidationError("type: expected \"threshold\" or \"sampled\"");
}

std::string to_json(const GraphId& g) { return json{{"n", g.n}, {"id", g.id}}.dump(); }

std::string to_json(const TvReport& report)
{
    return json{{"distance", rounded(report.distance)}, {"witness", report.witness}}.dump();
}

std::string to_json(const SpectrumSummary& s)
{
    return json{{"eigenvalues", rounded_array(s.eigenvalues)},
                {"power_sums", rounded_array(s.power_sums)},
                {"hs_norm_sq", rounded(s.hs_norm_sq)},
                {"rank", s.rank},
                {"squared_multiset", rounded_array(s.squared_multiset)}}
        .dump();
}

std::string to_json(const ErgVerdict& v)
{
    return json{{"verdict", v.is_erg ? "is_erg" : "not_erg"},
                {"rho", rounded(v.rho)},
                {"lambda1", rounded(v.lambda1)},
                {"rho4", rounded(v.rho4)},
                {"lambda1_4", rounded(v.lambda1_4)},
                {"sum_lambda4", rounded(v.sum_lambda4)},
                {"cycle_ratio4", rounded(v.cycle_ratio4)},
                {"gap", rounded(v.gap)}}
        .dump();
}

std::string to_json(const VrgApproxSpec& spec)
{
    return json{{"kernel", kernel_to_json(spec.kernel)}, {"M", spec.slots}, {"n", spec.n}}.dump();
}

std::string to_json(const CycleRecovery& r)
{
    return json{{"rank", r.rank},
                {"fourth_powers", rounded_array(r.fourth_powers)},
                {"squares", rounded_array(r.squares)},
                {"rank_exceeds_max", r.rank_exceeds_max}}
        .dump();
}

void write_distribution_csv(std::ostream& out, const Distribution& d)
{
    out << "graph_id,probability\n";
    for (std::size_t g = 0; g < d.size(); ++g) {
        out << g << ',' << format_number(d.probs[g]) << '\n';
    }
}

Distribution read_distribution_csv(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line) || line != "graph_id,probability") {
        throw ValidationError("distribution CSV: expected header 'graph_id,probability'");
    }
    std::vector<double> probs;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::istringstream row(line);
        row.imbue(std::locale::classic());
        std::uint64_t id = 0;
        char comma = 0;
        double p = 0.0;
        if (!(row >> id >> comma >> p) || comma != ',') {
            throw ValidationError("distribution CSV: malformed row '" + line + "'");
        }
        if (id != probs.size()) {
            throw ValidationError("distribution CSV: rows must list graph ids 0, 1, 2, ... in order");
        }
        probs.push_back(p);
    }
    for (int n = 1; n <= kMaxEnumerationVertices; ++n) {
        if (probs.size() == (std::size_t{1} << pair_count(n))) {
            Distribution d{n, std::move(probs)};
            validate(d, 1e-9);
            return d;
        }
    }
    throw ValidationError("distribution CSV: row count " + std::to_string(probs.size()) +
                          " is not 2^C(n,2) for any supported n");
}

void write_cycle_csv(std::ostream& out, const std::vector<CycleCountReport>& reports)
{
    out << "k,spectral,bruteforce,relative_gap\n";
    for (const auto& r : reports) {
        out << r.k << ',' << format_number(r.spectral_value) << ',' << format_number(r.bruteforce_value)
            << ',' << format_number(r.relative_gap) << '\n';
    }
}

void write_sample_csv(std::ostream& out, const std::vector<GraphId>& samples)
{
    out << "graph_id\n";
    for (const auto& g : samples) {
        out << g.id << '\n';
    }
}

} // namespace vergraph
