#pragma once

#include <string>

#include "cpnoise/filterfn.hpp"
#include "cpnoise/pulses.hpp"
#include "cpnoise/spectra.hpp"

namespace cpnoise {

// Quadrature of the slow-noise (dc) expansion.
enum class DcQuadrature { amplitude, detuning, cross };
std::string to_string(DcQuadrature q);

// Dimensionless dc-limit coefficient: for a single noise axis suppressed to
// order m-1, lambda^2 = c * (beta/W)^{2(m+1)} with W the peak Rabi rate; the
// cross coefficient multiplies (beta_a/W)^2 (beta_d/W)^2.
struct DcCoefficient {
    std::string sequence;
    DcQuadrature quadrature = DcQuadrature::amplitude;
    int order = 0;  // m
    double c = 0.0;
    double fit_residual = 0.0;
};

// Deficit rotation angle of the exact propagator under constant noise:
// U0^dag U = e^{ia} [cos(lambda) I - i sin(lambda) m.sigma].
double dc_deficit_angle(const PulseSequence& seq, double beta_a, double beta_d);

// Fits the coefficient from exact propagators at small constant noise
// (beta/W in {1e-3, 5e-4, 2.5e-4}, sign-symmetrized). Throws numerical_error
// when the residual exceeds 1%, which signals a wrong suppression order.
DcCoefficient dc_coefficient(const PulseSequence& seq, DcQuadrature q, int m);

// Designed dc suppression order of the cataloged sequences.
int dc_design_order(SequenceId id, Quadrature q);

struct DcLossParts {
    double amplitude = 0.0;
    double detuning = 0.0;
    double cross = 0.0;
    double total() const { return amplitude + detuning + cross; }
};

// Slow-noise loss: sum over active axes of c_{m+1} <beta^{2(m+1)}> / W^{2(m+1)},
// plus the c_{1,1} <beta_a^2><beta_d^2>/W^4 cross term for sequences that
// suppress both axes to first order.
DcLossParts dc_fidelity_loss_parts(const PulseSequence& seq, const NoiseSpectrum& spec_a,
                                   const NoiseSpectrum& spec_d);
double dc_fidelity_loss(const PulseSequence& seq, const NoiseSpectrum& spec_a,
                        const NoiseSpectrum& spec_d);

struct FfLossParts {
    double amplitude = 0.0;
    double detuning = 0.0;
    double total() const { return amplitude + detuning; }
};

struct LossOptions {
    double rel_tol = 1e-4;
    int initial_panels_per_decade = 8;
    int max_doublings = 8;
    int trapezoid_steps = 64;  // discretization for shaped sequences
};

// First-order spectral-overlap loss. Under paper_moment the two-sided
// integral of S F / w^2 is taken as is; under wiener_khinchin it carries the
// 1/2pi. Adaptive log-panel quadrature refined until the relative change is
// below rel_tol; throws numerical_error with diagnostics otherwise.
FfLossParts ff_fidelity_loss_parts(const PulseSequence& seq, const NoiseSpectrum& spec_a,
                                   const NoiseSpectrum& spec_d, const LossOptions& opts = {});
double ff_fidelity_loss(const PulseSequence& seq, const NoiseSpectrum& spec_a,
                        const NoiseSpectrum& spec_d, const LossOptions& opts = {});

struct FidelityEstimate {
    double ff_loss = 0.0;
    double dc_loss = 0.0;
    double combined = 0.0;  // max of the two
    FfLossParts ff_parts;
    DcLossParts dc_parts;
};

FidelityEstimate combined_estimate(const PulseSequence& seq, const NoiseSpectrum& spec_a,
                                   const NoiseSpectrum& spec_d, const LossOptions& opts = {});

}  // namespace cpnoise
