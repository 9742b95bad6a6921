#pragma once

#include <cstdint>
#include <vector>

#include "cpnoise/spectra.hpp"

namespace cpnoise {

// Continuous-time realization of a stationary zero-mean Gaussian process
// with the prescribed spectrum: a superposition of log-spaced harmonics,
// each carrying its band's power, with independent Gaussian quadrature
// amplitudes. Exactly Gaussian at every t, evaluable on any time grid, and
// bit-reproducible per seed. Spectral content above omega_cap is dropped
// and the lost fraction recorded.
class NoiseProcess {
public:
    NoiseProcess(const NoiseSpectrum& spectrum, double omega_cap, std::uint64_t seed,
                 int bins_per_decade = 48);

    double operator()(double t) const;
    double value_at_start() const { return (*this)(0.0); }
    bool is_zero() const { return components_.empty(); }
    double clipped_power_fraction() const { return clipped_fraction_; }

private:
    struct Component {
        double omega, cos_amp, sin_amp;
    };
    std::vector<Component> components_;
    double clipped_fraction_ = 0.0;
};

struct NoiseTrajectory {
    double dt = 0.0;
    std::vector<double> samples;  // sample n is beta(n * dt)
    std::uint64_t seed = 0;
    NoiseSpectrum spectrum;
    double clipped_power_fraction = 0.0;

    double duration() const { return dt * static_cast<double>(samples.size()); }
};

// Frequency-domain synthesis on the FFT grid of the requested window:
// independent complex Gaussian coefficients per resolvable bin, scaled so
// the ensemble periodogram reproduces S(omega) under the spectrum's
// convention, plus log-spaced sub-resolution harmonics carrying the power
// between omega_min and the first bin. Spectral content above the Nyquist
// rate pi/dt is clipped and recorded.
NoiseTrajectory synthesize(const NoiseSpectrum& spectrum, double dt, double duration,
                           std::uint64_t seed);

// Frequencies of the two-sided periodogram bins (0 .. N-1, wrap at N/2).
std::vector<double> periodogram_frequencies(std::size_t n, double dt);

// Unwindowed periodogram normalized under the given convention so that
// sum_k P_k * (2pi / (N dt)) equals the mean square of the samples.
std::vector<double> periodogram(const NoiseTrajectory& traj, SpectralConvention conv);

}  // namespace cpnoise
