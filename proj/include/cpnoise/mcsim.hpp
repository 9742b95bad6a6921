#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "cpnoise/noisegen.hpp"
#include "cpnoise/pulses.hpp"
#include "cpnoise/spectra.hpp"

namespace cpnoise {

// U = product over steps of exp[-i H dt] with
//   H = (W + beta_a)/2 (cos phi sx + sin phi sy) + beta_d/2 sz,
// beta values held constant per step (one entry per control step). Exact
// axis-angle exponentials keep the product unitary to rounding.
Mat2 propagate(const PiecewiseConstantControl& control, std::span<const double> beta_a,
               std::span<const double> beta_d);

// Uniform-grid trajectories; the trajectory spacing must divide every
// control step (each step is split into dt-sized slices, and the sample
// covering each slice is applied). Throws on grid mismatch or short
// trajectories.
Mat2 propagate(const PiecewiseConstantControl& control, const NoiseTrajectory& beta_a,
               const NoiseTrajectory& beta_d);

// |Tr(U0^dag U)|^2 / 4, clamped to [0, 1]; invariant under global phases.
double fidelity(const Mat2& u, const Mat2& u0);

struct EnsembleOptions {
    int realizations = 2000;
    double dt = 0.0;                    // 0 -> 2pi / (20 * peak amplitude)
    std::uint64_t seed = 0x1905;
    bool freeze_noise_at_start = false; // use beta(0) for the whole gate
    int threads = 0;                    // 0 -> CPNOISE_THREADS or 1
    int bins_per_decade = 48;
};

struct EnsembleResult {
    double mean_loss = 0.0;
    double std_error = 0.0;
    int realizations = 0;
    std::uint64_t seed = 0;
    double clipped_power_fraction = 0.0;  // worst over both noise channels
    std::string config_digest;
};

// Mean fidelity loss over independent noise realizations; realization i is
// seeded from (seed, i) so the result does not depend on execution order or
// thread count.
EnsembleResult ensemble(const PulseSequence& seq, const NoiseSpectrum& spec_a,
                        const NoiseSpectrum& spec_d, const EnsembleOptions& opts);

}  // namespace cpnoise
