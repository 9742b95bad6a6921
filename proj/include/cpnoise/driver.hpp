#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cpnoise/pulses.hpp"
#include "cpnoise/spectra.hpp"

namespace cpnoise::driver {

// One noise channel of the sweep. In "normalized" mode the amplitude is
// recomputed per knee as numerator / [ln(w_b/w_min) + 1 - w_b/w_max], which
// holds the total power fixed across the knee sweep; otherwise the fixed A
// is used as given.
struct SpectrumConfig {
    bool enabled = true;
    bool normalized = true;
    double numerator = 2.07e9;  // (rad/s)^3 per Hz
    double fixed_amplitude = 0.0;
    double omega_min = 6.283185307179586;  // 2pi rad/s
    double omega_b = 1.5e4;
    double omega_max = 4.5e9;
    SpectralConvention convention = SpectralConvention::paper_moment;

    NoiseSpectrum make(double knee) const;
    NoiseSpectrum make() const { return make(omega_b); }
};

struct SequenceSpec {
    std::string name;
    double theta;
    double omega;
    double ramp = 0.0;  // s; > 0 builds trapezoidal pulses
};

struct SweepConfig {
    std::vector<SequenceSpec> sequences;
    SpectrumConfig amplitude_noise;
    SpectrumConfig detuning_noise;

    // knee grids in rad/s; empty + enabled channel means "use the channel's
    // fixed omega_b as a single point"
    std::vector<double> knee_grid_amplitude;
    std::vector<double> knee_grid_detuning;

    double ff_lo_over_omega = 1e-4;
    double ff_hi_over_omega = 3.0;
    int ff_points_per_decade = 200;
    double slope_lo_over_omega = 1e-3;
    double slope_hi_over_omega = 1e-2;
    bool multiplicative_amplitude = false;  // shaped-pulse amplitude FF model

    int mc_realizations = 2000;
    double mc_dt = 0.0;
    std::uint64_t seed = 20260811;
    int threads = 0;

    std::vector<double> geometry_omegas_over_omega{0.01, 0.3};

    std::string output_dir = "out";
};

SweepConfig default_config();
SweepConfig load_config(const std::string& path);
SweepConfig parse_config(const std::string& json_text);

PulseSequence build(const SequenceSpec& spec);

// Each runner writes CSV files under config.output_dir and returns the
// number of rows that failed numerically (0 on full success).
int run_ff(const SweepConfig& config);
int run_fidelity_sweep(const SweepConfig& config);
int run_mc(const SweepConfig& config);
int run_geometry(const SweepConfig& config);
int run_dc_fit(const SweepConfig& config);

}  // namespace cpnoise::driver
