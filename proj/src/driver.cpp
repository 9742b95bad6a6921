#include "cpnoise/driver.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "cpnoise/analytic.hpp"
#include "cpnoise/errors.hpp"
#include "cpnoise/filterfn.hpp"
#include "cpnoise/geometry.hpp"
#include "cpnoise/mcsim.hpp"
#include "cpnoise/quadrature.hpp"

namespace cpnoise::driver {

using nlohmann::json;

NoiseSpectrum SpectrumConfig::make(double knee) const {
    if (!enabled) return NoiseSpectrum{};
    if (normalized)
        return NoiseSpectrum::normalized_rolloff(numerator, omega_min, knee, omega_max, convention);
    return NoiseSpectrum::one_over_f_with_rolloff(fixed_amplitude, omega_min, knee, omega_max,
                                                  convention);
}

SweepConfig default_config() {
    SweepConfig cfg;
    const double omega = 1.5e6;
    for (const char* name : {"primitive", "SK1", "BB1", "CORPSE", "CinSK", "CinBB", "DCG"})
        cfg.sequences.push_back({name, std::numbers::pi, omega, 0.0});
    cfg.detuning_noise.enabled = false;
    for (double k : log_grid(1e-3 * omega, 1e-1 * omega, 2)) cfg.knee_grid_amplitude.push_back(k);
    return cfg;
}

namespace {

SpectrumConfig parse_spectrum(const json& j, SpectrumConfig base) {
    if (j.is_null()) {
        base.enabled = false;
        return base;
    }
    base.enabled = j.value("enabled", true);
    if (j.contains("A")) {
        base.normalized = false;
        base.fixed_amplitude = j.at("A").get<double>();
    }
    if (j.contains("numerator")) {
        base.normalized = true;
        base.numerator = j.at("numerator").get<double>();
    }
    base.omega_min = j.value("omega_min", base.omega_min);
    base.omega_b = j.value("omega_b", base.omega_b);
    base.omega_max = j.value("omega_max", base.omega_max);
    if (j.contains("convention"))
        base.convention = parse_convention(j.at("convention").get<std::string>());
    return base;
}

std::vector<double> parse_knee_grid(const json& j, double omega) {
    std::vector<double> grid;
    if (j.is_array()) {
        for (const auto& v : j) grid.push_back(v.get<double>() * omega);
    } else if (j.is_object()) {
        const double lo = j.at("lo_over_omega").get<double>() * omega;
        const double hi = j.at("hi_over_omega").get<double>() * omega;
        const int points = j.at("points").get<int>();
        if (points < 1) throw std::invalid_argument("config: knee grid needs points >= 1");
        if (points == 1) {
            grid.push_back(lo);
        } else {
            for (int i = 0; i < points; ++i)
                grid.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (points - 1)));
        }
    } else {
        throw std::invalid_argument("config: knee grid must be an array or {lo,hi,points}");
    }
    return grid;
}

}  // namespace

SweepConfig parse_config(const std::string& json_text) {
    json j = json::parse(json_text);
    SweepConfig cfg = default_config();

    const double theta = j.value("theta", std::numbers::pi);
    const double omega = j.value("omega", 1.5e6);
    const double ramp = j.contains("shape") ? j.at("shape").value("ramp", 0.0) : 0.0;

    if (j.contains("sequences")) {
        cfg.sequences.clear();
        for (const auto& entry : j.at("sequences")) {
            SequenceSpec spec{"", theta, omega, ramp};
            if (entry.is_string()) {
                spec.name = entry.get<std::string>();
            } else {
                spec.name = entry.at("name").get<std::string>();
                spec.theta = entry.value("theta", theta);
                spec.omega = entry.value("omega", omega);
                if (entry.contains("shape")) spec.ramp = entry.at("shape").value("ramp", ramp);
            }
            parse_sequence_id(spec.name);  // validate early
            cfg.sequences.push_back(spec);
        }
    } else {
        for (auto& s : cfg.sequences) {
            s.theta = theta;
            s.omega = omega;
            s.ramp = ramp;
        }
    }

    if (j.contains("spectra")) {
        const auto& sp = j.at("spectra");
        if (sp.contains("amplitude"))
            cfg.amplitude_noise = parse_spectrum(sp.at("amplitude"), cfg.amplitude_noise);
        if (sp.contains("detuning")) {
            SpectrumConfig det = cfg.detuning_noise;
            det.enabled = true;
            cfg.detuning_noise = parse_spectrum(sp.at("detuning"), det);
        }
    }

    cfg.knee_grid_amplitude.clear();
    cfg.knee_grid_detuning.clear();
    if (j.contains("sweep")) {
        const auto& sw = j.at("sweep");
        if (sw.contains("omega_b_amplitude_over_omega"))
            cfg.knee_grid_amplitude = parse_knee_grid(sw.at("omega_b_amplitude_over_omega"), omega);
        if (sw.contains("omega_b_detuning_over_omega"))
            cfg.knee_grid_detuning = parse_knee_grid(sw.at("omega_b_detuning_over_omega"), omega);
    }
    if (cfg.amplitude_noise.enabled && cfg.knee_grid_amplitude.empty())
        cfg.knee_grid_amplitude.push_back(cfg.amplitude_noise.omega_b);
    if (cfg.detuning_noise.enabled && cfg.knee_grid_detuning.empty())
        cfg.knee_grid_detuning.push_back(cfg.detuning_noise.omega_b);

    if (j.contains("ff")) {
        const auto& ff = j.at("ff");
        cfg.ff_lo_over_omega = ff.value("lo_over_omega", cfg.ff_lo_over_omega);
        cfg.ff_hi_over_omega = ff.value("hi_over_omega", cfg.ff_hi_over_omega);
        cfg.ff_points_per_decade = ff.value("points_per_decade", cfg.ff_points_per_decade);
        if (ff.contains("slope_band_over_omega")) {
            const auto& band = ff.at("slope_band_over_omega");
            cfg.slope_lo_over_omega = band.at(0).get<double>();
            cfg.slope_hi_over_omega = band.at(1).get<double>();
        }
        const std::string model = ff.value("amplitude_model", "additive");
        if (model == "multiplicative")
            cfg.multiplicative_amplitude = true;
        else if (model != "additive")
            throw std::invalid_argument("config: amplitude_model must be additive|multiplicative");
    }

    if (j.contains("mc")) {
        const auto& mc = j.at("mc");
        cfg.mc_realizations = mc.value("realizations", cfg.mc_realizations);
        cfg.mc_dt = mc.value("dt", cfg.mc_dt);
        cfg.seed = mc.value("seed", cfg.seed);
        cfg.threads = mc.value("threads", cfg.threads);
    }

    if (j.contains("geometry")) {
        cfg.geometry_omegas_over_omega.clear();
        for (const auto& v : j.at("geometry").at("omegas_over_omega"))
            cfg.geometry_omegas_over_omega.push_back(v.get<double>());
    }

    cfg.output_dir = j.value("output_dir", cfg.output_dir);
    return cfg;
}

SweepConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

PulseSequence build(const SequenceSpec& spec) {
    PulseSequence seq = build_sequence(spec.name, spec.theta, spec.omega);
    if (spec.ramp > 0.0) seq = trapezoidalize(seq, spec.ramp);
    return seq;
}

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::ofstream open_csv(const std::string& dir, const std::string& name, const std::string& header) {
    std::filesystem::create_directories(dir);
    const auto path = std::filesystem::path(dir) / name;
    std::ofstream out(path, std::ios::binary);  // byte-stable across platforms
    if (!out) throw std::invalid_argument("cannot open output file: " + path.string());
    out << header << "\n";
    return out;
}

struct SweepPoint {
    double knee_a = 0.0;  // 0 marks a disabled channel
    double knee_d = 0.0;
};

std::vector<SweepPoint> sweep_points(const SweepConfig& cfg) {
    std::vector<SweepPoint> pts;
    const bool has_a = cfg.amplitude_noise.enabled && !cfg.knee_grid_amplitude.empty();
    const bool has_d = cfg.detuning_noise.enabled && !cfg.knee_grid_detuning.empty();
    if (has_a && has_d) {
        for (double ka : cfg.knee_grid_amplitude)
            for (double kd : cfg.knee_grid_detuning) pts.push_back({ka, kd});
    } else if (has_a) {
        for (double ka : cfg.knee_grid_amplitude) pts.push_back({ka, 0.0});
    } else if (has_d) {
        for (double kd : cfg.knee_grid_detuning) pts.push_back({0.0, kd});
    }
    if (pts.empty()) throw std::invalid_argument("config: no enabled noise channel / empty grids");
    return pts;
}

}  // namespace

int run_ff(const SweepConfig& cfg) {
    auto slopes = open_csv(cfg.output_dir, "ff_slopes.csv",
                           "sequence,quadrature,slope,omega_lo_over_Omega,omega_hi_over_Omega");
    for (const auto& spec : cfg.sequences) {
        const PulseSequence seq = build(spec);
        const auto grid = log_grid(cfg.ff_lo_over_omega * spec.omega,
                                   cfg.ff_hi_over_omega * spec.omega, cfg.ff_points_per_decade);
        const NoiseModel amp_model = cfg.multiplicative_amplitude
                                         ? NoiseModel::multiplicative_amplitude
                                         : NoiseModel::additive_amplitude;
        const FilterFunctionCurve curve = sample_curve(seq, grid, amp_model);
        auto out = open_csv(cfg.output_dir, "ff_" + spec.name + ".csv", "omega_over_Omega,F_a,F_d");
        for (std::size_t i = 0; i < grid.size(); ++i)
            out << fmt(grid[i] / spec.omega) << "," << fmt(curve.F_a[i]) << ","
                << fmt(curve.F_d[i]) << "\n";
        for (Quadrature q : {Quadrature::amplitude, Quadrature::detuning}) {
            const double slope = lowfreq_slope(curve, q, cfg.slope_lo_over_omega * spec.omega,
                                               cfg.slope_hi_over_omega * spec.omega);
            slopes << spec.name << "," << to_string(q) << "," << fmt(slope) << ","
                   << fmt(cfg.slope_lo_over_omega) << "," << fmt(cfg.slope_hi_over_omega) << "\n";
        }
    }
    return 0;
}

int run_fidelity_sweep(const SweepConfig& cfg) {
    auto out = open_csv(cfg.output_dir, "sweep.csv",
                        "sequence,omega_b_a,omega_b_d,ff_loss,dc_loss,combined");
    const auto pts = sweep_points(cfg);
    int failures = 0;
    for (const auto& spec : cfg.sequences) {
        const PulseSequence seq = build(spec);
        for (const auto& pt : pts) {
            const NoiseSpectrum sa =
                pt.knee_a > 0.0 ? cfg.amplitude_noise.make(pt.knee_a) : NoiseSpectrum{};
            const NoiseSpectrum sd =
                pt.knee_d > 0.0 ? cfg.detuning_noise.make(pt.knee_d) : NoiseSpectrum{};
            try {
                const FidelityEstimate est = combined_estimate(seq, sa, sd);
                out << spec.name << "," << fmt(pt.knee_a) << "," << fmt(pt.knee_d) << ","
                    << fmt(est.ff_loss) << "," << fmt(est.dc_loss) << "," << fmt(est.combined)
                    << "\n";
            } catch (const numerical_error& err) {
                ++failures;
                std::cerr << "sweep: " << spec.name << " omega_b_a=" << pt.knee_a
                          << " omega_b_d=" << pt.knee_d << ": " << err.what() << "\n";
            }
        }
    }
    return failures;
}

int run_mc(const SweepConfig& cfg) {
    auto out = open_csv(cfg.output_dir, "mc.csv",
                        "sequence,omega_b_a,omega_b_d,N,mean_loss,std_error,seed");
    const auto pts = sweep_points(cfg);
    for (const auto& spec : cfg.sequences) {
        const PulseSequence seq = build(spec);
        for (const auto& pt : pts) {
            const NoiseSpectrum sa =
                pt.knee_a > 0.0 ? cfg.amplitude_noise.make(pt.knee_a) : NoiseSpectrum{};
            const NoiseSpectrum sd =
                pt.knee_d > 0.0 ? cfg.detuning_noise.make(pt.knee_d) : NoiseSpectrum{};
            EnsembleOptions opts;
            opts.realizations = cfg.mc_realizations;
            opts.dt = cfg.mc_dt;
            opts.seed = cfg.seed;
            opts.threads = cfg.threads;
            const EnsembleResult res = ensemble(seq, sa, sd, opts);
            if (res.clipped_power_fraction > 1e-3)
                std::cerr << "mc: " << spec.name << " omega_b_a=" << pt.knee_a
                          << " omega_b_d=" << pt.knee_d << ": spectrum clipped at Nyquist ("
                          << res.clipped_power_fraction * 100.0 << "% of power)\n";
            out << spec.name << "," << fmt(pt.knee_a) << "," << fmt(pt.knee_d) << ","
                << res.realizations << "," << fmt(res.mean_loss) << "," << fmt(res.std_error)
                << "," << res.seed << "\n";
        }
    }
    return 0;
}

int run_geometry(const SweepConfig& cfg) {
    for (const auto& spec : cfg.sequences) {
        const PulseSequence seq = build(spec);
        if (!seq.all_square()) continue;  // chains are defined for square pulses
        auto out = open_csv(cfg.output_dir, "chains_" + spec.name + ".csv", "index,kind,x,y,z");
        const VectorChain stat = static_chain(seq);
        for (std::size_t i = 0; i < stat.terms.size(); ++i)
            out << i << "," << to_string(stat.kind) << "," << fmt(stat.terms[i].x) << ","
                << fmt(stat.terms[i].y) << "," << fmt(stat.terms[i].z) << "\n";
        for (double wo : cfg.geometry_omegas_over_omega) {
            const auto [a, b] = frequency_chains(seq, wo * spec.omega);
            for (std::size_t i = 0; i < a.terms.size(); ++i)
                out << i << "," << to_string(a.kind) << "@" << fmt(wo) << ","
                    << fmt(a.terms[i].x) << "," << fmt(a.terms[i].y) << "," << fmt(a.terms[i].z)
                    << "\n";
            for (std::size_t i = 0; i < b.terms.size(); ++i)
                out << i << "," << to_string(b.kind) << "@" << fmt(wo) << ","
                    << fmt(b.terms[i].x) << "," << fmt(b.terms[i].y) << "," << fmt(b.terms[i].z)
                    << "\n";
        }
    }
    return 0;
}

int run_dc_fit(const SweepConfig& cfg) {
    auto out = open_csv(cfg.output_dir, "dc_coefficients.csv",
                        "sequence,quadrature,m,c,fit_residual");
    int failures = 0;
    for (const auto& spec : cfg.sequences) {
        const PulseSequence seq = build(spec);
        const SequenceId id = parse_sequence_id(spec.name);
        std::vector<std::pair<DcQuadrature, int>> fits = {
            {DcQuadrature::amplitude, dc_design_order(id, Quadrature::amplitude)},
            {DcQuadrature::detuning, dc_design_order(id, Quadrature::detuning)},
        };
        if (id == SequenceId::cinsk || id == SequenceId::cinbb)
            fits.push_back({DcQuadrature::cross, 1});
        for (const auto& [q, m] : fits) {
            try {
                const DcCoefficient c = dc_coefficient(seq, q, m);
                out << spec.name << "," << to_string(q) << "," << m << "," << fmt(c.c) << ","
                    << fmt(c.fit_residual) << "\n";
            } catch (const numerical_error& err) {
                ++failures;
                std::cerr << "dc-fit: " << spec.name << " " << to_string(q) << ": " << err.what()
                          << "\n";
            }
        }
    }
    return failures;
}

}  // namespace cpnoise::driver
