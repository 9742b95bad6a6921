#include "cpnoise/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cpnoise {

std::string to_string(SpectralConvention c) {
    return c == SpectralConvention::paper_moment ? "paper_moment" : "wiener_khinchin";
}

SpectralConvention parse_convention(const std::string& s) {
    if (s == "paper_moment") return SpectralConvention::paper_moment;
    if (s == "wiener_khinchin") return SpectralConvention::wiener_khinchin;
    throw std::invalid_argument("unknown spectral convention: " + s);
}

NoiseSpectrum NoiseSpectrum::one_over_f_with_rolloff(double amplitude, double omega_min,
                                                     double omega_b, double omega_max,
                                                     SpectralConvention conv) {
    if (amplitude < 0.0) throw std::invalid_argument("NoiseSpectrum: amplitude must be >= 0");
    if (!(omega_min > 0.0) || !(omega_b >= omega_min) || !(omega_max >= omega_b))
        throw std::invalid_argument("NoiseSpectrum: need 0 < omega_min <= omega_b <= omega_max");
    NoiseSpectrum s;
    s.kind_ = Kind::power_law;
    s.amplitude_ = amplitude;
    s.omega_min_ = omega_min;
    s.omega_b_ = omega_b;
    s.omega_max_ = omega_max;
    s.convention_ = conv;
    return s;
}

NoiseSpectrum NoiseSpectrum::normalized_rolloff(double numerator, double omega_min,
                                                double omega_b, double omega_max,
                                                SpectralConvention conv) {
    const double denom = std::log(omega_b / omega_min) + 1.0 - omega_b / omega_max;
    if (!(denom > 0.0)) throw std::invalid_argument("normalized_rolloff: degenerate normalization");
    return one_over_f_with_rolloff(numerator / denom, omega_min, omega_b, omega_max, conv);
}

NoiseSpectrum NoiseSpectrum::benchmark_1of(double omega_b, SpectralConvention conv) {
    return normalized_rolloff(2.07e9, 2.0 * std::numbers::pi, omega_b, 4.5e9, conv);
}

NoiseSpectrum NoiseSpectrum::tabulated(std::vector<double> omegas, std::vector<double> values,
                                       SpectralConvention conv) {
    if (omegas.size() != values.size() || omegas.size() < 2)
        throw std::invalid_argument("NoiseSpectrum::tabulated: need >= 2 matching knots");
    for (std::size_t i = 0; i < omegas.size(); ++i) {
        if (!(omegas[i] > 0.0) || values[i] < 0.0)
            throw std::invalid_argument("NoiseSpectrum::tabulated: knots must have w > 0, S >= 0");
        if (i > 0 && !(omegas[i] > omegas[i - 1]))
            throw std::invalid_argument("NoiseSpectrum::tabulated: omegas must increase");
    }
    NoiseSpectrum s;
    s.kind_ = Kind::table;
    s.omega_min_ = omegas.front();
    s.omega_b_ = omegas.front();
    s.omega_max_ = omegas.back();
    s.convention_ = conv;
    s.knot_w_ = std::move(omegas);
    s.knot_s_ = std::move(values);
    s.amplitude_ = *std::max_element(s.knot_s_.begin(), s.knot_s_.end());
    return s;
}

bool NoiseSpectrum::is_zero() const {
    if (kind_ == Kind::power_law) return amplitude_ == 0.0 || omega_max_ == 0.0;
    return amplitude_ == 0.0;
}

double NoiseSpectrum::psd(double omega) const {
    const double w = std::abs(omega);
    if (is_zero() || w < omega_min_ || w > omega_max_) return 0.0;
    if (kind_ == Kind::power_law) return w < omega_b_ ? amplitude_ / w : omega_b_ * amplitude_ / (w * w);
    const auto it = std::upper_bound(knot_w_.begin(), knot_w_.end(), w);
    if (it == knot_w_.begin()) return knot_s_.front();
    if (it == knot_w_.end()) return knot_s_.back();
    const std::size_t i = static_cast<std::size_t>(it - knot_w_.begin());
    const double f = (w - knot_w_[i - 1]) / (knot_w_[i] - knot_w_[i - 1]);
    return knot_s_[i - 1] + f * (knot_s_[i] - knot_s_[i - 1]);
}

std::vector<double> NoiseSpectrum::breakpoints() const {
    if (kind_ == Kind::table) return knot_w_;
    std::vector<double> b{omega_min_};
    if (omega_b_ > omega_min_ && omega_b_ < omega_max_) b.push_back(omega_b_);
    b.push_back(omega_max_);
    return b;
}

double NoiseSpectrum::raw_band_integral(double w1, double w2) const {
    if (is_zero()) return 0.0;
    const double lo = std::max(w1, omega_min_);
    const double hi = std::min(w2, omega_max_);
    if (!(hi > lo)) return 0.0;
    if (kind_ == Kind::power_law) {
        double s = 0.0;
        const double lo1 = lo, hi1 = std::min(hi, omega_b_);
        if (hi1 > lo1) s += amplitude_ * std::log(hi1 / lo1);
        const double lo2 = std::max(lo, omega_b_), hi2 = hi;
        if (hi2 > lo2) s += omega_b_ * amplitude_ * (1.0 / lo2 - 1.0 / hi2);
        return s;
    }
    // trapezoid rule is exact for the piecewise-linear table
    double s = 0.0;
    for (std::size_t i = 1; i < knot_w_.size(); ++i) {
        const double a = std::max(lo, knot_w_[i - 1]);
        const double b = std::min(hi, knot_w_[i]);
        if (b > a) s += 0.5 * (psd(a) + psd(b)) * (b - a);
    }
    return s;
}

double NoiseSpectrum::band_power(double w1, double w2) const {
    const double two_sided = 2.0 * raw_band_integral(w1, w2);
    return convention_ == SpectralConvention::paper_moment
               ? two_sided
               : two_sided / (2.0 * std::numbers::pi);
}

double NoiseSpectrum::total_power() const { return band_power(0.0, omega_max_); }

double double_factorial_odd(int m) {
    double v = 1.0;
    for (int k = 3; k <= 2 * m + 1; k += 2) v *= k;
    return v;
}

double NoiseSpectrum::gaussian_moment(int m) const {
    if (m < 0) throw std::invalid_argument("gaussian_moment: order must be >= 0");
    return double_factorial_odd(m) * std::pow(total_power(), m + 1);
}

}  // namespace cpnoise
