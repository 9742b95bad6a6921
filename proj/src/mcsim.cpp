#include "cpnoise/mcsim.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "cpnoise/parallel.hpp"
#include "cpnoise/rng.hpp"

namespace cpnoise {

Mat2 propagate(const PiecewiseConstantControl& control, std::span<const double> beta_a,
               std::span<const double> beta_d) {
    if (beta_a.size() != control.steps.size() || beta_d.size() != control.steps.size())
        throw std::invalid_argument("propagate: one noise value per control step required");
    Mat2 u = Mat2::identity();
    for (std::size_t i = 0; i < control.steps.size(); ++i) {
        const auto& s = control.steps[i];
        const double drive = s.amplitude + beta_a[i];
        const Vec3 h{drive * std::cos(s.phase), drive * std::sin(s.phase), beta_d[i]};
        u = hamiltonian_step(h, s.dt) * u;
    }
    return u;
}

Mat2 propagate(const PiecewiseConstantControl& control, const NoiseTrajectory& beta_a,
               const NoiseTrajectory& beta_d) {
    if (beta_a.dt != beta_d.dt)
        throw std::invalid_argument("propagate: noise trajectories must share one grid");
    const double dt = beta_a.dt;
    if (beta_a.duration() + 1e-12 < control.total_duration() ||
        beta_d.duration() + 1e-12 < control.total_duration())
        throw std::invalid_argument("propagate: trajectories shorter than the control");

    Mat2 u = Mat2::identity();
    std::size_t slice = 0;  // slice [n dt, (n+1) dt) is driven by sample n
    for (const auto& s : control.steps) {
        const double slices_f = s.dt / dt;
        const long slices = std::lround(slices_f);
        if (slices < 1 || std::abs(slices_f - static_cast<double>(slices)) > 1e-6)
            throw std::invalid_argument("propagate: trajectory dt does not divide a control step");
        for (long k = 0; k < slices; ++k, ++slice) {
            const double ba = beta_a.samples[std::min(slice, beta_a.samples.size() - 1)];
            const double bd = beta_d.samples[std::min(slice, beta_d.samples.size() - 1)];
            const double drive = s.amplitude + ba;
            const Vec3 h{drive * std::cos(s.phase), drive * std::sin(s.phase), bd};
            u = hamiltonian_step(h, dt) * u;
        }
    }
    return u;
}

double fidelity(const Mat2& u, const Mat2& u0) {
    const double t = std::abs(trace(dagger(u0) * u));
    return std::min(1.0, 0.25 * t * t);
}

EnsembleResult ensemble(const PulseSequence& seq, const NoiseSpectrum& spec_a,
                        const NoiseSpectrum& spec_d, const EnsembleOptions& opts) {
    if (opts.realizations < 2)
        throw std::invalid_argument("ensemble: need at least two realizations");
    const double peak = seq.peak_amplitude();
    const double dt = opts.dt > 0.0 ? opts.dt : 2.0 * std::numbers::pi / (20.0 * peak);
    const PiecewiseConstantControl control = discretize_max_dt(seq, dt);
    const auto mid_times = control.midpoint_times();
    const Mat2 u0 = target_unitary(seq);
    const double omega_cap = std::numbers::pi / dt;

    const std::size_t n = static_cast<std::size_t>(opts.realizations);
    std::vector<double> losses(n, 0.0);
    double clipped = 0.0;
    {
        // clipping depends only on the spectra, not the realization
        const NoiseProcess pa(spec_a, omega_cap, 1, opts.bins_per_decade);
        const NoiseProcess pd(spec_d, omega_cap, 1, opts.bins_per_decade);
        clipped = std::max(pa.clipped_power_fraction(), pd.clipped_power_fraction());
    }

    parallel_for(n, opts.threads, [&](std::size_t i) {
        const NoiseProcess pa(spec_a, omega_cap, mix_seed(opts.seed, 2 * i), opts.bins_per_decade);
        const NoiseProcess pd(spec_d, omega_cap, mix_seed(opts.seed, 2 * i + 1),
                              opts.bins_per_decade);
        std::vector<double> ba(control.steps.size(), 0.0), bd(control.steps.size(), 0.0);
        if (opts.freeze_noise_at_start) {
            const double a0 = pa.is_zero() ? 0.0 : pa.value_at_start();
            const double d0 = pd.is_zero() ? 0.0 : pd.value_at_start();
            for (std::size_t k = 0; k < control.steps.size(); ++k) {
                ba[k] = a0;
                bd[k] = d0;
            }
        } else {
            for (std::size_t k = 0; k < control.steps.size(); ++k) {
                if (!pa.is_zero()) ba[k] = pa(mid_times[k]);
                if (!pd.is_zero()) bd[k] = pd(mid_times[k]);
            }
        }
        const Mat2 u = propagate(control, ba, bd);
        losses[i] = 1.0 - fidelity(u, u0);
    });

    double mean = 0.0;
    for (double v : losses) mean += v;
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (double v : losses) var += (v - mean) * (v - mean);
    var /= static_cast<double>(n - 1);

    EnsembleResult res;
    res.mean_loss = mean;
    res.std_error = std::sqrt(var / static_cast<double>(n));
    res.realizations = opts.realizations;
    res.seed = opts.seed;
    res.clipped_power_fraction = clipped;
    std::ostringstream digest;
    digest << seq.name << "|N=" << opts.realizations << "|dt=" << dt << "|seed=" << opts.seed
           << "|frozen=" << (opts.freeze_noise_at_start ? 1 : 0);
    res.config_digest = digest.str();
    return res;
}

}  // namespace cpnoise
