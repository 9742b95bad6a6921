#include "cpnoise/noisegen.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "cpnoise/fft.hpp"
#include "cpnoise/rng.hpp"

namespace cpnoise {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Geometric bin edges covering [lo, hi].
std::vector<double> log_edges(double lo, double hi, int bins_per_decade) {
    const double decades = std::log10(hi / lo);
    const int n = std::max(1, static_cast<int>(std::ceil(decades * bins_per_decade)));
    std::vector<double> e(n + 1);
    for (int i = 0; i <= n; ++i) e[i] = lo * std::pow(hi / lo, static_cast<double>(i) / n);
    e.front() = lo;
    e.back() = hi;
    return e;
}
}  // namespace

NoiseProcess::NoiseProcess(const NoiseSpectrum& spectrum, double omega_cap, std::uint64_t seed,
                           int bins_per_decade) {
    if (spectrum.is_zero()) return;
    if (!(omega_cap > 0.0)) throw std::invalid_argument("NoiseProcess: omega_cap must be positive");
    const double lo = spectrum.support_min();
    const double hi = std::min(spectrum.support_max(), omega_cap);
    const double total = spectrum.total_power();
    if (!(hi > lo)) {
        clipped_fraction_ = 1.0;
        return;
    }
    clipped_fraction_ = total > 0.0 ? spectrum.band_power(hi, spectrum.support_max()) / total : 0.0;

    Rng rng(seed);
    const auto edges = log_edges(lo, hi, bins_per_decade);
    components_.reserve(edges.size() - 1);
    for (std::size_t i = 1; i < edges.size(); ++i) {
        const double p = spectrum.band_power(edges[i - 1], edges[i]);
        const double sigma = std::sqrt(p);
        Component c;
        c.omega = std::sqrt(edges[i - 1] * edges[i]);
        c.cos_amp = sigma * rng.normal();
        c.sin_amp = sigma * rng.normal();
        components_.push_back(c);
    }
}

double NoiseProcess::operator()(double t) const {
    double v = 0.0;
    for (const auto& c : components_)
        v += c.cos_amp * std::cos(c.omega * t) + c.sin_amp * std::sin(c.omega * t);
    return v;
}

NoiseTrajectory synthesize(const NoiseSpectrum& spectrum, double dt, double duration,
                           std::uint64_t seed) {
    if (!(dt > 0.0) || !(duration > 0.0))
        throw std::invalid_argument("synthesize: dt and duration must be positive");
    const std::size_t n = std::max<std::size_t>(2, static_cast<std::size_t>(std::llround(duration / dt)));

    NoiseTrajectory traj;
    traj.dt = dt;
    traj.seed = seed;
    traj.spectrum = spectrum;
    traj.samples.assign(n, 0.0);
    if (spectrum.is_zero()) return traj;

    const double t_window = dt * static_cast<double>(n);
    const double dw = kTwoPi / t_window;
    const double nyquist = std::numbers::pi / dt;
    const double cap = std::min(nyquist, spectrum.support_max());
    const double total = spectrum.total_power();
    traj.clipped_power_fraction =
        total > 0.0 ? spectrum.band_power(cap, spectrum.support_max()) / total : 0.0;

    Rng rng(seed);

    // Resolvable bins k = 1 .. n/2 - 1 centered on k * dw; coefficient
    // c_k = a_k - i b_k with a, b ~ N(0, band power of the bin).
    std::vector<std::complex<double>> coef(n, 0.0);
    for (std::size_t k = 1; k < n / 2; ++k) {
        const double wk = static_cast<double>(k) * dw;
        const double p = spectrum.band_power(std::max(wk - 0.5 * dw, 0.0),
                                             std::min(wk + 0.5 * dw, cap));
        if (p <= 0.0) continue;
        const double sigma = std::sqrt(p);
        coef[k] = std::complex<double>(sigma * rng.normal(), -sigma * rng.normal());
    }
    dft(coef, true);
    for (std::size_t i = 0; i < n; ++i) traj.samples[i] = coef[i].real();

    // Power below the first resolvable bin appears as slow components.
    const double sub_hi = std::min(0.5 * dw, cap);
    if (sub_hi > spectrum.support_min()) {
        const NoiseSpectrum sub = spectrum;  // reuse band_power on the same shape
        const auto edges = log_edges(spectrum.support_min(), sub_hi, 32);
        for (std::size_t i = 1; i < edges.size(); ++i) {
            const double p = sub.band_power(edges[i - 1], edges[i]);
            if (p <= 0.0) continue;
            const double sigma = std::sqrt(p);
            const double w = std::sqrt(edges[i - 1] * edges[i]);
            const double a = sigma * rng.normal();
            const double b = sigma * rng.normal();
            for (std::size_t m = 0; m < n; ++m) {
                const double t = dt * static_cast<double>(m);
                traj.samples[m] += a * std::cos(w * t) + b * std::sin(w * t);
            }
        }
    }
    return traj;
}

std::vector<double> periodogram_frequencies(std::size_t n, double dt) {
    std::vector<double> w(n);
    const double dw = kTwoPi / (dt * static_cast<double>(n));
    for (std::size_t k = 0; k < n; ++k) {
        const double idx = k <= n / 2 ? static_cast<double>(k)
                                      : static_cast<double>(k) - static_cast<double>(n);
        w[k] = idx * dw;
    }
    return w;
}

std::vector<double> periodogram(const NoiseTrajectory& traj, SpectralConvention conv) {
    const std::size_t n = traj.samples.size();
    if (n < 256) throw std::invalid_argument("periodogram: need at least 256 samples");
    std::vector<std::complex<double>> a(n);
    for (std::size_t i = 0; i < n; ++i) a[i] = traj.samples[i];
    dft(a, false);
    // |X_k|^2 dt / (2pi N) integrates (over the two-sided grid) to the mean
    // square of the samples; the Wiener-Khinchin normalization carries 2pi.
    const double scale = conv == SpectralConvention::paper_moment
                             ? traj.dt / (kTwoPi * static_cast<double>(n))
                             : traj.dt / static_cast<double>(n);
    std::vector<double> p(n);
    for (std::size_t k = 0; k < n; ++k) p[k] = std::norm(a[k]) * scale;
    return p;
}

}  // namespace cpnoise
