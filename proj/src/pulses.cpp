#include "cpnoise/pulses.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace cpnoise {

namespace {
constexpr double kPi = std::numbers::pi;

Segment square(double angle, double phase, double omega) {
    return Segment{angle / omega, omega, phase, 0.0};
}
}  // namespace

SequenceId parse_sequence_id(const std::string& name) {
    std::string s;
    s.reserve(name.size());
    for (char c : name) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (s == "primitive") return SequenceId::primitive;
    if (s == "sk1") return SequenceId::sk1;
    if (s == "bb1") return SequenceId::bb1;
    if (s == "corpse") return SequenceId::corpse;
    if (s == "cinsk") return SequenceId::cinsk;
    if (s == "cinbb") return SequenceId::cinbb;
    if (s == "dcg") return SequenceId::dcg;
    throw std::invalid_argument("unknown sequence id: " + name);
}

std::string to_string(SequenceId id) {
    switch (id) {
        case SequenceId::primitive: return "primitive";
        case SequenceId::sk1: return "SK1";
        case SequenceId::bb1: return "BB1";
        case SequenceId::corpse: return "CORPSE";
        case SequenceId::cinsk: return "CinSK";
        case SequenceId::cinbb: return "CinBB";
        case SequenceId::dcg: return "DCG";
    }
    return "?";
}

double PulseSequence::total_duration() const {
    double t = 0.0;
    for (const auto& s : segments) t += s.duration;
    return t;
}

double PulseSequence::peak_amplitude() const {
    double a = 0.0;
    for (const auto& s : segments) a = std::max(a, s.amplitude);
    return a;
}

bool PulseSequence::all_square() const {
    return std::all_of(segments.begin(), segments.end(),
                       [](const Segment& s) { return s.is_square(); });
}

std::vector<double> PulseSequence::boundary_times() const {
    std::vector<double> t{0.0};
    t.reserve(segments.size() + 1);
    for (const auto& s : segments) t.push_back(t.back() + s.duration);
    return t;
}

double PiecewiseConstantControl::total_duration() const {
    double t = 0.0;
    for (const auto& s : steps) t += s.dt;
    return t;
}

std::vector<double> PiecewiseConstantControl::boundary_times() const {
    std::vector<double> t{0.0};
    t.reserve(steps.size() + 1);
    for (const auto& s : steps) t.push_back(t.back() + s.dt);
    return t;
}

std::vector<double> PiecewiseConstantControl::midpoint_times() const {
    std::vector<double> t;
    t.reserve(steps.size());
    double acc = 0.0;
    for (const auto& s : steps) {
        t.push_back(acc + 0.5 * s.dt);
        acc += s.dt;
    }
    return t;
}

PulseSequence build_sequence(SequenceId id, double theta, double omega) {
    if (!(omega > 0.0)) throw std::invalid_argument("build_sequence: omega must be positive");
    if (!(theta > 0.0) || theta > 2.0 * kPi + 1e-12)
        throw std::invalid_argument("build_sequence: theta must lie in (0, 2pi]");

    const double phi1 = std::acos(-theta / (4.0 * kPi));
    const double k = std::asin(0.5 * std::sin(0.5 * theta));

    PulseSequence seq;
    seq.name = to_string(id);
    seq.target_theta = theta;
    seq.target_phi = 0.0;

    const auto corpse_triple = [&]() {
        seq.segments.push_back(square(2.0 * kPi + 0.5 * theta - k, 0.0, omega));
        seq.segments.push_back(square(2.0 * kPi - 2.0 * k, kPi, omega));
        seq.segments.push_back(square(0.5 * theta - k, 0.0, omega));
    };

    switch (id) {
        case SequenceId::primitive:
            seq.segments.push_back(square(theta, 0.0, omega));
            break;
        case SequenceId::sk1:
            seq.segments.push_back(square(theta, 0.0, omega));
            seq.segments.push_back(square(2.0 * kPi, -phi1, omega));
            seq.segments.push_back(square(2.0 * kPi, phi1, omega));
            break;
        case SequenceId::bb1:
            seq.segments.push_back(square(theta, 0.0, omega));
            seq.segments.push_back(square(kPi, phi1, omega));
            seq.segments.push_back(square(2.0 * kPi, 3.0 * phi1, omega));
            seq.segments.push_back(square(kPi, phi1, omega));
            break;
        case SequenceId::corpse:
            corpse_triple();
            break;
        case SequenceId::cinsk:
            corpse_triple();
            seq.segments.push_back(square(2.0 * kPi, -phi1, omega));
            seq.segments.push_back(square(2.0 * kPi, phi1, omega));
            break;
        case SequenceId::cinbb:
            corpse_triple();
            seq.segments.push_back(square(kPi, phi1, omega));
            seq.segments.push_back(square(2.0 * kPi, 3.0 * phi1, omega));
            seq.segments.push_back(square(kPi, phi1, omega));
            break;
        case SequenceId::dcg: {
            if (std::abs(theta - kPi) > 1e-12)
                throw std::invalid_argument("build_sequence: DCG is defined for theta = pi only");
            const double tau = 4.0 * kPi / omega;
            seq.segments.push_back(Segment{0.25 * tau, omega, 0.0, 0.0});
            seq.segments.push_back(Segment{0.50 * tau, 0.5 * omega, 0.0, 0.0});
            seq.segments.push_back(Segment{0.25 * tau, omega, 0.0, 0.0});
            break;
        }
    }
    return seq;
}

PulseSequence build_sequence(const std::string& name, double theta, double omega) {
    return build_sequence(parse_sequence_id(name), theta, omega);
}

PulseSequence trapezoidalize(const PulseSequence& seq, double ramp) {
    if (ramp < 0.0) throw std::invalid_argument("trapezoidalize: ramp must be >= 0");
    if (ramp == 0.0) return seq;
    const double peak = seq.peak_amplitude();
    PulseSequence out = seq;
    for (auto& s : out.segments) {
        if (!s.is_square()) throw std::invalid_argument("trapezoidalize: sequence already shaped");
        const double r = ramp * (peak / s.amplitude);  // stretched-and-scaled rule
        const double w = s.duration - r;               // hold; duration - ramp stays fixed
        if (!(w > 0.0))
            throw std::invalid_argument("trapezoidalize: ramp too large for segment");
        s.ramp = r;
        s.duration = w + 2.0 * r;
    }
    return out;
}

namespace {

void emit_even_steps(std::vector<ControlStep>& steps, double duration, int n, double amplitude,
                     double phase) {
    const double dt = duration / n;
    for (int i = 0; i < n; ++i) steps.push_back(ControlStep{dt, amplitude, phase});
}

// ramp sampled at sub-step midpoints; rising = amplitude grows 0 -> peak
void emit_ramp_steps(std::vector<ControlStep>& steps, double ramp, int n, double peak,
                     double phase, bool rising) {
    const double dt = ramp / n;
    for (int i = 0; i < n; ++i) {
        const double frac = (i + 0.5) / n;
        const double a = peak * (rising ? frac : 1.0 - frac);
        steps.push_back(ControlStep{dt, a, phase});
    }
}

PiecewiseConstantControl discretize_impl(const PulseSequence& seq,
                                         const std::function<int(double)>& steps_for) {
    PiecewiseConstantControl control;
    control.provenance = seq.name;
    control.peak_amplitude = seq.peak_amplitude();
    for (const auto& s : seq.segments) {
        if (s.is_square()) {
            emit_even_steps(control.steps, s.duration, steps_for(s.duration), s.amplitude, s.phase);
        } else {
            emit_ramp_steps(control.steps, s.ramp, steps_for(s.ramp), s.amplitude, s.phase, true);
            if (s.hold() > 0.0)
                emit_even_steps(control.steps, s.hold(), steps_for(s.hold()), s.amplitude, s.phase);
            emit_ramp_steps(control.steps, s.ramp, steps_for(s.ramp), s.amplitude, s.phase, false);
        }
    }
    return control;
}

}  // namespace

PiecewiseConstantControl discretize(const PulseSequence& seq, int steps_per_segment) {
    if (steps_per_segment < 1)
        throw std::invalid_argument("discretize: steps_per_segment must be >= 1");
    return discretize_impl(seq, [steps_per_segment](double) { return steps_per_segment; });
}

PiecewiseConstantControl discretize_max_dt(const PulseSequence& seq, double max_dt) {
    if (!(max_dt > 0.0)) throw std::invalid_argument("discretize_max_dt: max_dt must be positive");
    return discretize_impl(seq, [max_dt](double duration) {
        return std::max(1, static_cast<int>(std::ceil(duration / max_dt - 1e-12)));
    });
}

Mat2 ideal_product(const PulseSequence& seq) {
    Mat2 u = Mat2::identity();
    for (const auto& s : seq.segments) u = rotation_su2(s.angle(), s.phase) * u;
    return u;
}

Mat2 target_unitary(const PulseSequence& seq) {
    const Mat2 target = rotation_su2(seq.target_theta, seq.target_phi);
    const double defect = distance_up_to_phase(ideal_product(seq), target);
    if (defect > 1e-10)
        throw std::logic_error("target_unitary: segment product deviates from target (defect " +
                               std::to_string(defect) + ")");
    return target;
}

}  // namespace cpnoise
