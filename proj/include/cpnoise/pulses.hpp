#pragma once

#include <string>
#include <vector>

#include "cpnoise/linalg.hpp"

namespace cpnoise {

// One constant-phase control segment. A square segment has ramp == 0; a
// trapezoidal one ramps linearly up over `ramp`, holds the peak for
// duration - 2*ramp, and ramps back down. The rotation angle it implements
// is amplitude * (duration - ramp) (area under the envelope).
struct Segment {
    double duration = 0.0;   // s
    double amplitude = 0.0;  // rad/s, peak Rabi rate
    double phase = 0.0;      // rad
    double ramp = 0.0;       // s

    bool is_square() const { return ramp == 0.0; }
    double hold() const { return duration - 2.0 * ramp; }
    double angle() const { return amplitude * (duration - ramp); }
};

enum class SequenceId { primitive, sk1, bb1, corpse, cinsk, cinbb, dcg };

SequenceId parse_sequence_id(const std::string& name);
std::string to_string(SequenceId id);

struct PulseSequence {
    std::string name;
    double target_theta = 0.0;
    double target_phi = 0.0;
    std::vector<Segment> segments;

    double total_duration() const;
    double peak_amplitude() const;
    bool all_square() const;
    // t_0 = 0 < t_1 < ... < t_n
    std::vector<double> boundary_times() const;
};

// One zero-order-hold step of a discretized control.
struct ControlStep {
    double dt = 0.0;         // s
    double amplitude = 0.0;  // rad/s
    double phase = 0.0;      // rad
};

struct PiecewiseConstantControl {
    std::string provenance;
    double peak_amplitude = 0.0;  // reference for multiplicative noise weights
    std::vector<ControlStep> steps;

    double total_duration() const;
    std::vector<double> boundary_times() const;
    std::vector<double> midpoint_times() const;
};

// Sequence catalog. phi1 = arccos(-theta/4pi), k = arcsin(sin(theta/2)/2).
// Segment durations are angle/amplitude. The DCG is defined for theta = pi
// only: amplitudes (omega, omega/2, omega) over (tau/4, tau/2, tau/4), all
// phases zero.
PulseSequence build_sequence(SequenceId id, double theta, double omega);
PulseSequence build_sequence(const std::string& name, double theta, double omega);

// Converts every segment to a trapezoid with the same peak amplitude,
// keeping duration - ramp (and hence the rotation angle) fixed, so each
// segment grows by its ramp time. The per-segment ramp is scaled by
// peak/amplitude, which stretches lower-amplitude segments proportionally
// (the DCG middle segment gets twice the ramp at half the amplitude).
PulseSequence trapezoidalize(const PulseSequence& seq, double ramp);

// Square segments split into steps_per_segment equal steps; each trapezoid
// section (ramp up, hold, ramp down) gets steps_per_segment steps with ramp
// amplitudes sampled at sub-step midpoints. Total time is preserved exactly.
PiecewiseConstantControl discretize(const PulseSequence& seq, int steps_per_segment);

// Same sampling rule, but chooses per-section step counts so that no step
// exceeds max_dt.
PiecewiseConstantControl discretize_max_dt(const PulseSequence& seq, double max_dt);

// Ideal propagator of the sequence (product of segment rotations).
Mat2 ideal_product(const PulseSequence& seq);

// R(target_theta, target_phi); throws std::logic_error if the segment
// product does not match it up to a global phase within 1e-10.
Mat2 target_unitary(const PulseSequence& seq);

}  // namespace cpnoise
