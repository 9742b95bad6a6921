#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cpnoise/pulses.hpp"
#include "cpnoise/toggling.hpp"

namespace cpnoise {

enum class Quadrature { amplitude, detuning };
std::string to_string(Quadrature q);

enum class NoiseModel { additive_amplitude, multiplicative_amplitude, detuning };

// Precomputed toggling-frame data for fast filter-function evaluation on a
// frequency grid. Values are dimensionless and even in omega.
class FilterEvaluator {
public:
    explicit FilterEvaluator(const PulseSequence& seq);             // square pulses, exact
    explicit FilterEvaluator(const PiecewiseConstantControl& ctl);  // stepwise

    double amplitude(double omega, NoiseModel model = NoiseModel::additive_amplitude) const;
    double detuning(double omega) const;
    double operator()(double omega, Quadrature q) const {
        return q == Quadrature::amplitude ? amplitude(omega) : detuning(omega);
    }

    double total_duration() const { return boundaries_.back(); }

private:
    struct Step {
        double t0, dt, rate;
        Vec3 amp_tilde, det_cos, det_sin;
        double mult_weight;  // rate / peak, for multiplicative amplitude noise
    };
    std::vector<Step> steps_;
    std::vector<double> boundaries_;

    void init(const ControlVectorTrajectory& traj, double peak);
};

struct FilterFunctionCurve {
    std::string sequence;
    std::vector<double> omegas;  // rad/s
    std::vector<double> F_a;
    std::vector<double> F_d;
};

double ff_amplitude(const PulseSequence& seq, double omega);
double ff_detuning(const PulseSequence& seq, double omega);
double ff_discretized(const PiecewiseConstantControl& ctl, double omega, NoiseModel model);

FilterFunctionCurve sample_curve(const PulseSequence& seq, const std::vector<double>& omegas,
                                 NoiseModel amplitude_model = NoiseModel::additive_amplitude);

// Least-squares slope of log F vs log omega over [omega_lo, omega_hi].
// Throws std::domain_error if the band is empty or contains non-positive F.
double lowfreq_slope(const FilterFunctionCurve& curve, Quadrature q, double omega_lo,
                     double omega_hi);

// Smallest omega in (0, Omega] at which the sequence FF first reaches the
// primitive FF for the same target angle and Rabi rate. Empty if the curves
// do not cross below Omega.
std::optional<double> crossover(const PulseSequence& seq, Quadrature q);

}  // namespace cpnoise
