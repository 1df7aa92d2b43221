// pacsig: modulation-index significance toolkit.
//
// Subcommands:
//   mi        compute MI with significance for a CSV signal
//   null      print the closed-form null model for (n, bins)
//   simulate  generate a coupling scenario signal
//   validate  Monte Carlo check of the null model (Q-Q table + KS)
//   sweep     MI-vs-strength curves across bin counts and seeds

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "pacsig/pacsig.hpp"
#include "pacsig/json_io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_error = 1;
constexpr int exit_not_significant = 2;

fs::path resolve_out(const std::string& name) {
    fs::path p(name);
    if (p.is_absolute()) return p;
    if (const char* dir = std::getenv("PACSIG_OUT_DIR"); dir && *dir)
        return fs::path(dir) / p;
    return p;
}

void write_text(const fs::path& path, const std::string& text) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

// Every artifact-producing command drops a manifest next to its outputs;
// re-running the same manifest reproduces them.
void write_manifest(const fs::path& out_path, const std::string& command,
                    const json& config, const std::vector<std::string>& outputs) {
    json m{
        {"command", command},
        {"version", pacsig::version},
        {"config", config},
        {"outputs", outputs},
    };
    write_text(out_path, m.dump(2) + "\n");
}

pacsig::BandSpec parse_band(const std::vector<double>& v, const std::string& name) {
    if (v.size() != 2)
        throw CLI::ValidationError(name, "expected two comma-separated values lo,hi");
    return {v[0], v[1]};
}

pacsig::FilterSpec parse_filter(const std::string& shape, double order) {
    pacsig::FilterSpec f;
    if (shape == "ideal") {
        f.shape = pacsig::FilterShape::ideal;
    } else if (shape == "soft") {
        f.shape = pacsig::FilterShape::soft;
        f.order = order;
    } else {
        throw CLI::ValidationError("--filter", "must be 'soft' or 'ideal'");
    }
    return f;
}

json band_json(const pacsig::BandSpec& b) {
    return {{"f_lo", b.f_lo}, {"f_hi", b.f_hi}};
}

struct MiArgs {
    std::string input;
    double fs = 300.0;
    std::vector<double> low{0.1, 5.0};
    std::vector<double> high{10.0, 75.0};
    std::size_t bins = 18;
    double alpha = 0.01;
    std::string filter_shape = "soft";
    double filter_order = 0.75;
    bool strict = false;
    std::string out;
};

int run_mi(const MiArgs& a) {
    const auto cols = pacsig::read_csv_columns(a.input);
    if (cols.size() > 2)
        throw std::runtime_error(a.input + ": expected one or two columns, got " +
                                 std::to_string(cols.size()));
    const pacsig::TimeSeries phase_src(cols[0], a.fs);
    const pacsig::TimeSeries amp_src(cols.size() == 2 ? cols[1] : cols[0], a.fs);
    const auto low = parse_band(a.low, "--low");
    const auto high = parse_band(a.high, "--high");
    const auto filter = parse_filter(a.filter_shape, a.filter_order);

    const auto value = pacsig::mi_pipeline(phase_src, amp_src, low, high, a.bins, filter);
    const auto verdict = pacsig::assess(value, phase_src.size(), a.alpha);

    json report = pacsig::to_json(verdict);
    report["entropy"] = value.entropy_nats;
    report["n"] = phase_src.size();
    report["bins"] = a.bins;
    report["channels"] = cols.size();
    report["low_band"] = band_json(low);
    report["high_band"] = band_json(high);
    report["filter"] = {{"shape", a.filter_shape}, {"order", a.filter_order}};

    const std::string text = report.dump(2) + "\n";
    std::cout << text;
    if (!a.out.empty()) write_text(resolve_out(a.out), text);
    return (a.strict && !verdict.significant) ? exit_not_significant : exit_ok;
}

struct NullArgs {
    std::size_t n = 0;
    std::size_t bins = 18;
    double alpha = 0.01;
    std::optional<double> mi;
    std::string out;
};

int run_null(const NullArgs& a) {
    const auto params = pacsig::null_params(a.n, a.bins);
    json report = pacsig::to_json(params);
    report["alpha"] = a.alpha;
    report["critical_value"] = pacsig::critical_value(params, a.alpha);
    if (a.mi) {
        report["mi"] = *a.mi;
        report["p_value"] = pacsig::p_value(params, *a.mi);
        report["significant"] = pacsig::p_value(params, *a.mi) < a.alpha;
    }
    const std::string text = report.dump(2) + "\n";
    std::cout << text;
    if (!a.out.empty()) write_text(resolve_out(a.out), text);
    return exit_ok;
}

struct SimArgs {
    std::string kind = "am";
    double strength = 1.0;
    double fs = 300.0;
    double duration = 2.0;
    std::uint64_t seed = 0;
    bool jitter = false;
    std::string out = "signal.csv";
};

int run_simulate(const SimArgs& a) {
    auto cfg = pacsig::scenario_defaults(pacsig::scenario_kind_from(a.kind));
    cfg.strength = a.strength;
    cfg.fs = a.fs;
    cfg.duration = a.duration;
    cfg.seed = a.seed;
    cfg.jitter = a.jitter;
    const auto sig = pacsig::simulate_scenario(cfg);

    const auto out_path = resolve_out(a.out);
    if (out_path.has_parent_path()) fs::create_directories(out_path.parent_path());
    pacsig::write_signal_csv(out_path.string(), sig.samples);

    const json config{
        {"kind", a.kind},        {"strength", a.strength}, {"fs", a.fs},
        {"duration", a.duration}, {"seed", a.seed},        {"jitter", a.jitter},
        {"low_band", band_json(cfg.low_band)},
        {"high_band", band_json(cfg.high_band)},
    };
    const auto manifest = out_path.string() + ".manifest.json";
    write_manifest(manifest, "simulate", config, {out_path.string()});
    std::cout << "wrote " << out_path.string() << " (" << sig.size() << " samples)\n";
    return exit_ok;
}

struct ValidateArgs {
    std::size_t n = 1000;
    std::size_t bins = 18;
    std::size_t reps = 10000;
    std::uint64_t seed = 0;
    std::string out_dir = "validate";
};

int run_validate(const ValidateArgs& a) {
    if (a.reps < 1) throw std::runtime_error("--reps must be >= 1");
    const auto params = pacsig::null_params(a.n, a.bins);
    const auto sample = pacsig::mc_null(a.n, a.bins, a.reps, a.seed);

    std::vector<double> quantiles;
    for (int k = 1; k <= 99; ++k) quantiles.push_back(static_cast<double>(k) / 100.0);
    const auto table = pacsig::qq_table(sample, params, quantiles);
    const double ks = pacsig::ks_distance(sample, params);

    const auto dir = resolve_out(a.out_dir);
    fs::create_directories(dir);
    const auto qq_path = dir / "qq.csv";
    pacsig::write_qq_csv(qq_path.string(), table);

    json report{
        {"n", a.n},
        {"bins", a.bins},
        {"reps", a.reps},
        {"seed", a.seed},
        {"ks_distance", ks},
        {"params", pacsig::to_json(params)},
    };
    const auto ks_path = dir / "ks.json";
    write_text(ks_path, report.dump(2) + "\n");

    const json config{{"n", a.n}, {"bins", a.bins}, {"reps", a.reps}, {"seed", a.seed}};
    write_manifest(dir / "manifest.json", "validate", config,
                   {qq_path.string(), ks_path.string()});
    std::cout << "ks_distance " << pacsig::format_double(ks) << "\n";
    return exit_ok;
}

struct SweepArgs {
    std::string kind = "am";
    std::vector<double> strengths;
    std::vector<std::size_t> bins_list{9, 18, 36, 60};
    std::size_t seeds = 20;
    std::uint64_t master_seed = 0;
    bool jitter = false;
    std::string filter_shape = "soft";
    double filter_order = 0.75;
    std::string out = "sweep.csv";
};

int run_sweep(const SweepArgs& a) {
    const auto kind = pacsig::scenario_kind_from(a.kind);
    if (a.strengths.empty()) throw std::runtime_error("--strengths must be nonempty");
    if (a.seeds < 1) throw std::runtime_error("--seeds must be >= 1");
    std::vector<std::uint64_t> seeds;
    seeds.reserve(a.seeds);
    for (std::size_t i = 0; i < a.seeds; ++i)
        seeds.push_back(pacsig::derive_seed(a.master_seed, i));

    auto base = pacsig::scenario_defaults(kind);
    base.jitter = a.jitter;
    base.filter = parse_filter(a.filter_shape, a.filter_order);
    const auto rows = pacsig::sweep(kind, a.strengths, a.bins_list, seeds, base);

    const auto out_path = resolve_out(a.out);
    if (out_path.has_parent_path()) fs::create_directories(out_path.parent_path());
    pacsig::write_sweep_csv(out_path.string(), rows);

    const json config{
        {"kind", a.kind},
        {"strengths", a.strengths},
        {"bins_list", a.bins_list},
        {"seeds", a.seeds},
        {"master_seed", a.master_seed},
        {"jitter", a.jitter},
        {"filter", {{"shape", a.filter_shape}, {"order", a.filter_order}}},
    };
    write_manifest(out_path.string() + ".manifest.json", "sweep", config,
                   {out_path.string()});
    std::cout << "wrote " << out_path.string() << " (" << rows.size() << " rows)\n";
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Modulation-index estimation with a closed-form significance test"};
    app.set_version_flag("--version", pacsig::version);
    app.require_subcommand(1);

    MiArgs mi;
    auto* cmd_mi = app.add_subcommand("mi", "MI and significance for a CSV signal");
    cmd_mi->add_option("-i,--input", mi.input, "single- or two-column CSV")->required();
    cmd_mi->add_option("--fs", mi.fs, "sampling rate, Hz");
    cmd_mi->add_option("--low", mi.low, "phase band lo,hi")->delimiter(',');
    cmd_mi->add_option("--high", mi.high, "amplitude band lo,hi")->delimiter(',');
    cmd_mi->add_option("-b,--bins", mi.bins, "phase bins");
    cmd_mi->add_option("-a,--alpha", mi.alpha, "significance level");
    cmd_mi->add_option("--filter", mi.filter_shape, "spectral mask: soft|ideal");
    cmd_mi->add_option("--filter-order", mi.filter_order, "soft mask rolloff order");
    cmd_mi->add_flag("--strict", mi.strict, "exit 2 when not significant");
    cmd_mi->add_option("-o,--out", mi.out, "also write the JSON report here");

    NullArgs nul;
    auto* cmd_null = app.add_subcommand("null", "closed-form null model for (n, bins)");
    cmd_null->add_option("-n,--n", nul.n, "sample length")->required();
    cmd_null->add_option("-b,--bins", nul.bins, "phase bins");
    cmd_null->add_option("-a,--alpha", nul.alpha, "significance level");
    double mi_opt = -1.0;
    auto* mi_flag = cmd_null->add_option("--mi", mi_opt, "also report the p-value of this MI");
    cmd_null->add_option("-o,--out", nul.out, "also write the JSON report here");

    SimArgs sim;
    auto* cmd_sim = app.add_subcommand("simulate", "generate a coupling scenario");
    cmd_sim->add_option("-k,--kind", sim.kind, "am|spikes|hfo")->required();
    cmd_sim->add_option("-A,--strength", sim.strength, "coupling strength");
    cmd_sim->add_option("--fs", sim.fs, "sampling rate, Hz");
    cmd_sim->add_option("--duration", sim.duration, "seconds");
    cmd_sim->add_option("-s,--seed", sim.seed, "noise seed");
    cmd_sim->add_flag("--jitter", sim.jitter, "jitter event times by +-1/6 s");
    cmd_sim->add_option("-o,--out", sim.out, "output CSV path");

    ValidateArgs val;
    auto* cmd_val = app.add_subcommand("validate", "Monte Carlo null-model check");
    cmd_val->add_option("-n,--n", val.n, "sample length");
    cmd_val->add_option("-b,--bins", val.bins, "phase bins");
    cmd_val->add_option("-r,--reps", val.reps, "replicates");
    cmd_val->add_option("-s,--seed", val.seed, "master seed");
    cmd_val->add_option("-o,--out-dir", val.out_dir, "output directory");

    SweepArgs swp;
    auto* cmd_swp = app.add_subcommand("sweep", "MI-vs-strength curves");
    cmd_swp->add_option("-k,--kind", swp.kind, "am|spikes|hfo")->required();
    cmd_swp->add_option("-A,--strengths", swp.strengths, "strength grid")
        ->delimiter(',')->required();
    cmd_swp->add_option("-b,--bins-list", swp.bins_list, "bin counts")->delimiter(',');
    cmd_swp->add_option("--seeds", swp.seeds, "replicates per cell");
    cmd_swp->add_option("-s,--master-seed", swp.master_seed, "master seed");
    cmd_swp->add_flag("--jitter", swp.jitter, "jitter event times");
    cmd_swp->add_option("--filter", swp.filter_shape, "spectral mask: soft|ideal");
    cmd_swp->add_option("--filter-order", swp.filter_order, "soft mask rolloff order");
    cmd_swp->add_option("-o,--out", swp.out, "output CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? exit_ok : exit_error;
    }

    try {
        if (cmd_mi->parsed()) return run_mi(mi);
        if (cmd_null->parsed()) {
            if (mi_flag->count() > 0) nul.mi = mi_opt;
            return run_null(nul);
        }
        if (cmd_sim->parsed()) return run_simulate(sim);
        if (cmd_val->parsed()) return run_validate(val);
        if (cmd_swp->parsed()) return run_sweep(swp);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_error;
    }
    return exit_error;
}
