#include "cli_app.hpp"

#include "vergraph/approximate.hpp"
#include "vergraph/budget.hpp"
#include "vergraph/checks.hpp"
#include "vergraph/io.hpp"
#include "vergraph/metrics.hpp"
#include "vergraph/models.hpp"
#include "vergraph/represent3.hpp"
#include "vergraph/sampling.hpp"
#include "vergraph/spectral.hpp"
#include "vergraph/symmetric_functions.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace vergraph::cli {

namespace {

using nlohmann::json;

struct Options {
    std::string model;
    std::string circle;
    std::string out;
    std::string distribution_out;
    std::string left;
    std::string right;
    std::string check_name;
    std::optional<int> n;
    std::uint64_t samples = 1;
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
    std::optional<std::uint64_t> slots;
    std::optional<double> eps;
    std::vector<int> cycle_lengths;
    int grid = 101;
    std::size_t m = 2048;
    double p = 0.3;
    int k_max = 201;
    int r_max = 2;
    int powers = 4;
    double step = 0.001;
    bool exhaustive = false;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ValidationError("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Runs `write` against --out when given, else against `out`.
void emit(const std::string& path, std::ostream& out, const std::function<void(std::ostream&)>& write)
{
    if (path.empty()) {
        write(out);
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw ValidationError("cannot write '" + path + "'");
    }
    file.imbue(std::locale::classic());
    write(file);
}

ModelSpec load_model(const Options& o)
{
    if (o.model.empty()) {
        throw ValidationError("--model is required");
    }
    return parse_model_spec(read_file(o.model), o.n);
}

FiniteKernel kernel_of(const ModelSpec& spec)
{
    if (const auto* v = std::get_if<FiniteVergModel>(&spec.model)) {
        return v->kernel;
    }
    if (const auto* e = std::get_if<ErgModel>(&spec.model)) {
        return FiniteKernel::constant(e->p);
    }
    throw ValidationError("model: this verb needs a verg_finite (or erg) model");
}

Distribution load_distribution(const std::string& path, const Options& o)
{
    if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv") {
        std::ifstream in(path);
        if (!in) {
            throw ValidationError("cannot open '" + path + "'");
        }
        return read_distribution_csv(in);
    }
    return exact_distribution(parse_model_spec(read_file(path), o.n));
}

std::uint64_t slot_count(const Options& o, int n)
{
    if (o.slots && o.eps) {
        throw ValidationError("give either --M or --eps, not both");
    }
    if (o.eps) {
        return choose_slot_count(n, *o.eps);
    }
    if (o.slots) {
        return *o.slots;
    }
    throw ValidationError("--M or --eps is required");
}

int require_n(const Options& o, const char* verb)
{
    if (!o.n) {
        throw ValidationError(std::string(verb) + ": --n is required");
    }
    return *o.n;
}

json rounded(double v) { return json::parse(format_number(v)); }

int run_exact(const Options& o, std::ostream& out)
{
    const auto d = exact_distribution(load_model(o));
    emit(o.out, out, [&](std::ostream& s) { write_distribution_csv(s, d); });
    return kOk;
}

int run_sample(const Options& o, std::ostream& out)
{
    const auto spec = load_model(o);
    if (o.samples == 0) {
        throw ValidationError("--samples must be >= 1");
    }
    const SeedSpec seed{o.seed, o.stream};
    std::vector<GraphId> draws;
    draws.reserve(o.samples);
    for (std::uint64_t s = 0; s < o.samples; ++s) {
        draws.push_back(sample_model(spec, seed.substream(s)));
    }
    emit(o.out, out, [&](std::ostream& s) { write_sample_csv(s, draws); });
    if (!o.distribution_out.empty()) {
        const auto d = empirical_distribution(spec, o.samples, seed);
        emit(o.distribution_out, out, [&](std::ostream& s) { write_distribution_csv(s, d); });
    }
    return kOk;
}

int run_tv(const Options& o, std::ostream& out)
{
    if (o.left.empty() || o.right.empty()) {
        throw ValidationError("tv: --left and --right are required");
    }
    const auto p1 = load_distribution(o.left, o);
    const auto p2 = load_distribution(o.right, o);
    json report = json::parse(to_json(tv_witness(p1, p2)));
    if (o.exhaustive) {
        report["max_event"] = rounded(max_event_discrepancy(p1, p2));
    }
    emit(o.out, out, [&](std::ostream& s) { s << report.dump() << '\n'; });
    return kOk;
}

int run_spectrum(const Options& o, std::ostream& out)
{
    json report;
    if (!o.circle.empty()) {
        const auto spectrum = circle_kernel_spectrum(parse_circle_kernel(read_file(o.circle)), o.m);
        report["spectrum"] = json::parse(to_json(spectrum.summary));
        report["cube_sum"] = rounded(spectrum.cube_sum);
    } else {
        const auto kernel = kernel_of(load_model(o));
        report["spectrum"] = json::parse(to_json(operator_eigenvalues(kernel, o.powers)));
        report["rho"] = rounded(mean_edge_probability(kernel));
        report["hs_norm_sq"] = rounded(hs_norm_sq(kernel));
        const auto binary = is_binary_kernel(kernel);
        report["binary"] = binary.binary;
        report["binary_defect"] = rounded(binary.defect);
        report["positive_dependence_gap"] = rounded(positive_dependence_gap(kernel));
        if (o.n) {
            report["erg_test"] = json::parse(to_json(erg_representation_test(kernel, *o.n)));
        }
    }
    emit(o.out, out, [&](std::ostream& s) { s << report.dump() << '\n'; });
    return kOk;
}

int run_cycles(const Options& o, std::ostream& out)
{
    const auto spec = load_model(o);
    const auto kernel = kernel_of(spec);
    std::vector<int> lengths = o.cycle_lengths;
    if (lengths.empty()) {
        for (int k = 3; k <= spec.n; ++k) {
            lengths.push_back(k);
        }
    }
    std::vector<CycleCountReport> reports;
    for (int k : lengths) {
        reports.push_back(cycle_count_report(kernel, spec.n, k));
    }
    emit(o.out, out, [&](std::ostream& s) { write_cycle_csv(s, reports); });
    return kOk;
}

int run_approx(const Options& o, std::ostream& out, std::ostream& err)
{
    const auto spec = load_model(o);
    const auto kernel = kernel_of(spec);
    const auto approx = build_vrg_approx(kernel, spec.n, slot_count(o, spec.n));
    const auto exact = approx_exact_distribution(approx);
    const double tv = tv_distance(verg_exact_distribution(spec.n, kernel), exact);
    const auto rep = repetition_probability(spec.n, approx.slots);

    json report = json::parse(to_json(approx));
    report["tv"] = rounded(tv);
    report["bound"] = rounded(static_cast<double>(spec.n) * spec.n / static_cast<double>(approx.slots));
    report["repetition_exact"] = rounded(rep.exact);
    report["repetition_bound"] = rounded(rep.bound);
    if (o.samples > 1) {
        const auto empirical = empirical_vrg_approx(approx, o.samples, SeedSpec{o.seed, o.stream});
        report["empirical_tv_to_exact"] = rounded(tv_distance(empirical, exact));
    }
    if (o.out.empty()) {
        out << report.dump() << '\n';
    } else {
        emit(o.out, out, [&](std::ostream& s) { write_distribution_csv(s, exact); });
        err << report.dump() << '\n';
    }
    return kOk;
}

int run_represent3(const Options& o, std::ostream& out, std::ostream& err)
{
    const auto kernel = kernel_of(load_model(o));
    const auto result = n3_exact_distribution_discrete(kernel, o.grid);
    const auto exact = verg_exact_distribution(3, result.snapped);
    json report{{"grid", o.grid},
                {"snap_distance", rounded(result.snap_distance)},
                {"tv_to_snapped_verg", rounded(tv_distance(result.distribution, exact))}};
    if (o.out.empty()) {
        out << report.dump() << '\n';
    } else {
        emit(o.out, out, [&](std::ostream& s) { write_distribution_csv(s, result.distribution); });
        err << report.dump() << '\n';
    }
    return kOk;
}

int run_check(const Options& o, std::ostream& out)
{
    const std::string& name = o.check_name;
    CheckReport report;
    if (name == "thm33") {
        const int n = require_n(o, "check thm33");
        report = check_approximation_bound(kernel_of(load_model(o)), n, slot_count(o, n));
    } else if (name == "lemma43") {
        const int n = require_n(o, "check lemma43");
        const auto kernel = kernel_of(load_model(o));
        if (o.cycle_lengths.size() != 1) {
            throw ValidationError("check lemma43: give exactly one --k");
        }
        report = check_rooted_cycles(kernel, n, o.cycle_lengths.front());
    } else if (name == "thm44") {
        report = check_three_vertex_representation(kernel_of(load_model(o)), o.grid);
    } else if (name == "thm42") {
        const int n = require_n(o, "check thm42");
        report = check_erg_rigidity(kernel_of(load_model(o)), n, o.step);
    } else if (name == "lemma45") {
        report = check_mod_k_bijection(o.k_max);
    } else if (name == "rmk47") {
        report = check_circle_spectrum(o.p, o.m);
    } else if (name == "posdep") {
        report = check_positive_dependence(kernel_of(load_model(o)));
    } else if (name == "rank") {
        report = check_rank_recovery(kernel_of(load_model(o)), o.r_max);
    } else if (name == "prop32") {
        if (o.left.empty() || o.right.empty()) {
            throw ValidationError("check prop32: --left and --right are required");
        }
        report = check_event_discrepancy(load_distribution(o.left, o), load_distribution(o.right, o));
    } else {
        throw ValidationError("check: unknown verification '" + name + "'");
    }
    emit(o.out, out, [&](std::ostream& s) { s << report.line() << '\n'; });
    return report.pass ? kOk : kCheckFailed;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"vergraph: random graph models over finite type spaces"};
    app.require_subcommand(1);
    Options o;

    auto add_model = [&](CLI::App* cmd, bool required) {
        auto* opt = cmd->add_option("--model", o.model, "model spec JSON file");
        if (required) {
            opt->required();
        }
        cmd->add_option("--n", o.n, "vertex count (overrides the spec's n)");
    };
    auto add_out = [&](CLI::App* cmd) { cmd->add_option("--out", o.out, "output file (default stdout)"); };
    auto add_seed = [&](CLI::App* cmd) {
        cmd->add_option("--seed", o.seed, "64-bit seed");
        cmd->add_option("--stream", o.stream, "64-bit stream index");
    };

    auto* exact = app.add_subcommand("exact", "exact distribution over G_n as CSV");
    add_model(exact, true);
    add_out(exact);

    auto* sample = app.add_subcommand("sample", "seeded samples as a CSV of graph ids");
    add_model(sample, true);
    add_out(sample);
    add_seed(sample);
    sample->add_option("--samples", o.samples, "number of samples");
    sample->add_option("--distribution", o.distribution_out, "also write the empirical distribution CSV");

    auto* tv = app.add_subcommand("tv", "total variation distance between two laws");
    tv->add_option("--left", o.left, "model JSON or distribution CSV")->required();
    tv->add_option("--right", o.right, "model JSON or distribution CSV")->required();
    tv->add_option("--n", o.n, "vertex count for model inputs");
    tv->add_flag("--exhaustive", o.exhaustive, "also maximize over all events (n <= 3)");
    add_out(tv);

    auto* spectrum = app.add_subcommand("spectrum", "operator spectrum and kernel diagnostics as JSON");
    add_model(spectrum, false);
    spectrum->add_option("--circle", o.circle, "circle kernel JSON file");
    spectrum->add_option("--m", o.m, "Fourier resolution for circle kernels");
    spectrum->add_option("--powers", o.powers, "number of power sums");
    add_out(spectrum);

    auto* cycles = app.add_subcommand("cycles", "rooted-cycle expectations, spectral vs direct, as CSV");
    add_model(cycles, true);
    cycles->add_option("--k", o.cycle_lengths, "cycle lengths (default 3..n)");
    add_out(cycles);

    auto* approx = app.add_subcommand("approx", "slot-VRG approximation of a finite VERG");
    add_model(approx, true);
    approx->add_option("--M", o.slots, "slot count M");
    approx->add_option("--eps", o.eps, "target TV; picks the smallest M > n^2/eps");
    approx->add_option("--samples", o.samples, "also sample and report empirical TV");
    add_seed(approx);
    add_out(approx);

    auto* represent3 = app.add_subcommand("represent3", "discrete three-vertex VRG representation");
    add_model(represent3, true);
    represent3->add_option("--grid", o.grid, "odd grid resolution");
    add_out(represent3);

    auto* check = app.add_subcommand("check", "run a named verification; exit 0 iff it holds");
    check->add_option("name", o.check_name,
                      "thm33 | lemma43 | thm44 | thm42 | lemma45 | rmk47 | posdep | rank | prop32")
        ->required();
    add_model(check, false);
    check->add_option("--M", o.slots, "slot count (thm33)");
    check->add_option("--eps", o.eps, "target TV (thm33)");
    check->add_option("--k", o.cycle_lengths, "cycle length (lemma43)");
    check->add_option("--grid", o.grid, "odd grid (thm44)");
    check->add_option("--step", o.step, "ERG grid step (thm42)");
    check->add_option("--k-max", o.k_max, "largest modulus (lemma45)");
    check->add_option("--p", o.p, "threshold (rmk47)");
    check->add_option("--m", o.m, "Fourier resolution (rmk47)");
    check->add_option("--r-max", o.r_max, "largest rank (rank)");
    check->add_option("--left", o.left, "first law (prop32)");
    check->add_option("--right", o.right, "second law (prop32)");
    add_out(check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kValidationError;
    }

    try {
        if (*exact) return run_exact(o, out);
        if (*sample) return run_sample(o, out);
        if (*tv) return run_tv(o, out);
        if (*spectrum) return run_spectrum(o, out);
        if (*cycles) return run_cycles(o, out);
        if (*approx) return run_approx(o, out, err);
        if (*represent3) return run_represent3(o, out, err);
        if (*check) return run_check(o, out);
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kValidationError;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kBudgetError;
    } catch (const IllConditioned& e) {
        err << "error: " << e.what() << '\n';
        return kCheckFailed;
    }
    return kValidationError;
}

} // namespace vergraph::cli
