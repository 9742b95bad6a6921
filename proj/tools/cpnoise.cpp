#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cpnoise/driver.hpp"
#include "cpnoise/errors.hpp"

namespace {

struct CommonArgs {
    std::string config_path;
    std::string output_dir;
    std::vector<std::string> sequences;
    double theta = 0.0;
    double omega = 0.0;
    double ramp = -1.0;
    double omega_b_over_omega = 0.0;
    int realizations = 0;
    long long seed = -1;
    int threads = -1;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--config", args.config_path, "JSON config file");
    cmd->add_option("--out", args.output_dir, "output directory");
    cmd->add_option("--seq", args.sequences,
                    "restrict to these sequences (primitive SK1 BB1 CORPSE CinSK CinBB DCG)");
    cmd->add_option("--theta", args.theta, "target rotation angle, rad");
    cmd->add_option("--omega", args.omega, "Rabi rate, rad/s");
    cmd->add_option("--ramp", args.ramp, "trapezoid ramp time, s");
    cmd->add_option("--omega-b", args.omega_b_over_omega,
                    "single roll-off knee in units of omega (replaces sweep grids)");
    cmd->add_option("--n", args.realizations, "Monte Carlo realizations");
    cmd->add_option("--seed", args.seed, "ensemble seed");
    cmd->add_option("--threads", args.threads, "worker threads (default: CPNOISE_THREADS or 1)");
}

cpnoise::driver::SweepConfig resolve(const CommonArgs& args) {
    using namespace cpnoise::driver;
    SweepConfig cfg =
        args.config_path.empty() ? default_config() : load_config(args.config_path);
    if (!args.output_dir.empty()) cfg.output_dir = args.output_dir;
    if (!args.sequences.empty()) {
        std::vector<SequenceSpec> keep;
        for (const auto& name : args.sequences) {
            cpnoise::parse_sequence_id(name);
            bool found = false;
            for (const auto& s : cfg.sequences)
                if (cpnoise::parse_sequence_id(s.name) == cpnoise::parse_sequence_id(name)) {
                    keep.push_back(s);
                    found = true;
                    break;
                }
            if (!found) {
                SequenceSpec spec = cfg.sequences.empty()
                                        ? SequenceSpec{name, 3.141592653589793, 1.5e6, 0.0}
                                        : cfg.sequences.front();
                spec.name = name;
                keep.push_back(spec);
            }
        }
        cfg.sequences = keep;
    }
    for (auto& s : cfg.sequences) {
        if (args.theta > 0.0) s.theta = args.theta;
        if (args.omega > 0.0) s.omega = args.omega;
        if (args.ramp >= 0.0) s.ramp = args.ramp;
    }
    if (args.omega_b_over_omega > 0.0) {
        const double omega = cfg.sequences.empty() ? 1.5e6 : cfg.sequences.front().omega;
        const double knee = args.omega_b_over_omega * omega;
        if (cfg.amplitude_noise.enabled) cfg.knee_grid_amplitude = {knee};
        if (cfg.detuning_noise.enabled) cfg.knee_grid_detuning = {knee};
    }
    if (args.realizations > 0) cfg.mc_realizations = args.realizations;
    if (args.seed >= 0) cfg.seed = static_cast<std::uint64_t>(args.seed);
    if (args.threads >= 0) cfg.threads = args.threads;
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"composite-pulse robustness analysis: filter functions, dc limits, Monte Carlo"};
    app.require_subcommand(1);

    CommonArgs args;
    auto* ff = app.add_subcommand("ff", "filter-function curves and low-frequency slopes");
    auto* sweep = app.add_subcommand("sweep", "analytic fidelity-loss sweep over roll-off knees");
    auto* mc = app.add_subcommand("mc", "Monte Carlo ensemble fidelity loss");
    auto* geometry = app.add_subcommand("geometry", "closure-diagram vector chains");
    auto* dcfit = app.add_subcommand("dc-fit", "dc-limit coefficient fits");
    for (auto* cmd : {ff, sweep, mc, geometry, dcfit}) add_common(cmd, args);

    CLI11_PARSE(app, argc, argv);

    try {
        const auto cfg = resolve(args);
        int failures = 0;
        if (ff->parsed()) failures = cpnoise::driver::run_ff(cfg);
        if (sweep->parsed()) failures = cpnoise::driver::run_fidelity_sweep(cfg);
        if (mc->parsed()) failures = cpnoise::driver::run_mc(cfg);
        if (geometry->parsed()) failures = cpnoise::driver::run_geometry(cfg);
        if (dcfit->parsed()) failures = cpnoise::driver::run_dc_fit(cfg);
        if (failures > 0) {
            std::cerr << failures << " row(s) failed numerically\n";
            return 2;
        }
    } catch (const cpnoise::numerical_error& err) {
        std::cerr << "numerical failure: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 0;
}
