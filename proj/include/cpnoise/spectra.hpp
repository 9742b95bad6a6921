#pragma once

#include <string>
#include <vector>

namespace cpnoise {

// Relation between the two-sided PSD values S(w) and the process variance.
//   paper_moment:     <beta^2> = integral of S over (-inf, inf)
//   wiener_khinchin:  <beta^2> = (1/2pi) * that integral
// The choice propagates consistently into moments, noise-synthesis
// calibration, and the spectral-overlap loss prefactor.
enum class SpectralConvention { paper_moment, wiener_khinchin };

std::string to_string(SpectralConvention c);
SpectralConvention parse_convention(const std::string& s);

// Two-sided noise power spectral density, even in omega. Either a piecewise
// power law  S = A/|w| up to the knee w_b, then w_b A / w^2 up to w_max,
// zero elsewhere  -- or a tabulated curve with linear interpolation.
class NoiseSpectrum {
public:
    NoiseSpectrum() = default;  // zero spectrum

    static NoiseSpectrum one_over_f_with_rolloff(double amplitude, double omega_min,
                                                 double omega_b, double omega_max,
                                                 SpectralConvention conv);

    // Knee-swept spectrum with the amplitude renormalized as
    // A(w_b) = numerator / [ln(w_b/w_min) + 1 - w_b/w_max], which keeps the
    // total two-sided integral fixed at 2*numerator across the sweep.
    static NoiseSpectrum normalized_rolloff(double numerator, double omega_min, double omega_b,
                                            double omega_max, SpectralConvention conv);

    // The benchmark parameter set: numerator 2.07e9 (rad/s)^3/Hz,
    // w_min = 2pi rad/s, w_max = 4.5e9 rad/s.
    static NoiseSpectrum benchmark_1of(double omega_b,
                                       SpectralConvention conv = SpectralConvention::paper_moment);

    static NoiseSpectrum tabulated(std::vector<double> omegas, std::vector<double> values,
                                   SpectralConvention conv);

    bool is_zero() const;
    double psd(double omega) const;  // S(|omega|)
    double support_min() const { return omega_min_; }
    double support_max() const { return omega_max_; }
    double knee() const { return omega_b_; }
    double amplitude() const { return amplitude_; }
    SpectralConvention convention() const { return convention_; }

    // Kinks/knots where the integrand loses smoothness; useful for quadrature.
    std::vector<double> breakpoints() const;

    // Contribution to <beta^2> from |omega| in [w1, w2] (convention applied).
    double band_power(double w1, double w2) const;

    // <beta^2>, closed form.
    double total_power() const;

    // <beta^{2(m+1)}> = (2m+1)!! * total_power^{m+1}
    double gaussian_moment(int m) const;

private:
    enum class Kind { power_law, table };
    Kind kind_ = Kind::power_law;
    double amplitude_ = 0.0;
    double omega_min_ = 0.0, omega_b_ = 0.0, omega_max_ = 0.0;
    SpectralConvention convention_ = SpectralConvention::paper_moment;
    std::vector<double> knot_w_, knot_s_;

    double raw_band_integral(double w1, double w2) const;  // one-sided, no convention factor
};

double double_factorial_odd(int m);  // (2m+1)!!

}  // namespace cpnoise
