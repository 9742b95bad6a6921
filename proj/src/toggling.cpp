#include "cpnoise/toggling.hpp"

#include <cmath>
#include <stdexcept>

namespace cpnoise {

namespace {

struct StepView {
    double duration;
    double amplitude;
    double phase;
};

template <typename Steps>
TogglingFrame frame_from_steps(const Steps& steps) {
    TogglingFrame frame;
    frame.boundary_times.push_back(0.0);
    Mat2 cumulative = Mat2::identity();
    for (const auto& s : steps) {
        frame.lambdas.push_back(so3_adjoint(cumulative));
        cumulative = rotation_su2(s.amplitude * s.duration, s.phase) * cumulative;
        frame.boundary_times.push_back(frame.boundary_times.back() + s.duration);
    }
    frame.final_frame = so3_adjoint(cumulative);
    return frame;
}

template <typename Steps>
ControlVectorTrajectory trajectory_from_steps(const Steps& steps) {
    ControlVectorTrajectory traj;
    double t = 0.0;
    Mat2 cumulative = Mat2::identity();
    for (const auto& s : steps) {
        const Mat3 lam = so3_adjoint(cumulative);
        ControlVectorTrajectory::SegmentVectors sv;
        sv.t_start = t;
        sv.duration = s.duration;
        sv.rate = s.amplitude;
        const double cp = std::cos(s.phase), sp = std::sin(s.phase);
        sv.amp_tilde = apply_row({cp, sp, 0.0}, lam);
        sv.det_cos_axis = apply_row({0.0, 0.0, 1.0}, lam);
        sv.det_sin_axis = apply_row({-sp, cp, 0.0}, lam);
        traj.segments.push_back(sv);
        cumulative = rotation_su2(s.amplitude * s.duration, s.phase) * cumulative;
        t += s.duration;
    }
    return traj;
}

std::vector<StepView> square_steps(const PulseSequence& seq) {
    if (!seq.all_square())
        throw std::invalid_argument("toggling: shaped sequences must be discretized first");
    std::vector<StepView> v;
    v.reserve(seq.segments.size());
    for (const auto& s : seq.segments) v.push_back({s.duration, s.amplitude, s.phase});
    return v;
}

std::vector<StepView> control_steps(const PiecewiseConstantControl& control) {
    std::vector<StepView> v;
    v.reserve(control.steps.size());
    for (const auto& s : control.steps) v.push_back({s.dt, s.amplitude, s.phase});
    return v;
}

// int_0^d cos(W u) du = d sinc(h) cos(h) and int_0^d sin(W u) du =
// d sin(h) sinc(h) with h = W d / 2; stable as W d -> 0.
std::pair<double, double> trig_integrals(double rate, double d) {
    const double h = 0.5 * rate * d;
    return {d * sinc(h) * std::cos(h), d * std::sin(h) * sinc(h)};
}

template <typename Steps>
std::pair<Vec3, Vec3> integrals_from_steps(const Steps& steps) {
    const auto traj = trajectory_from_steps(steps);
    Vec3 ia, id;
    for (const auto& sv : traj.segments) {
        ia += (0.5 * sv.duration) * sv.amp_tilde;
        const auto [ic, is] = trig_integrals(sv.rate, sv.duration);
        id += 0.5 * (ic * sv.det_cos_axis + is * sv.det_sin_axis);
    }
    return {ia, id};
}

}  // namespace

TogglingFrame toggling_matrices(const PulseSequence& seq) {
    auto frame = frame_from_steps(square_steps(seq));
    return frame;
}

TogglingFrame toggling_matrices(const PiecewiseConstantControl& control) {
    return frame_from_steps(control_steps(control));
}

const ControlVectorTrajectory::SegmentVectors& ControlVectorTrajectory::locate(double t) const {
    for (const auto& sv : segments) {
        if (t < sv.t_start + sv.duration) return sv;
    }
    return segments.back();
}

double ControlVectorTrajectory::total_duration() const {
    if (segments.empty()) return 0.0;
    return segments.back().t_start + segments.back().duration;
}

Vec3 ControlVectorTrajectory::rho_a(double t) const {
    return 0.5 * locate(t).amp_tilde;
}

Vec3 ControlVectorTrajectory::rho_d(double t) const {
    const auto& sv = locate(t);
    const double a = sv.rate * (t - sv.t_start);
    return 0.5 * (std::cos(a) * sv.det_cos_axis + std::sin(a) * sv.det_sin_axis);
}

ControlVectorTrajectory control_trajectories(const PulseSequence& seq) {
    return trajectory_from_steps(square_steps(seq));
}

ControlVectorTrajectory control_trajectories(const PiecewiseConstantControl& control) {
    return trajectory_from_steps(control_steps(control));
}

std::pair<Vec3, Vec3> first_order_integrals(const PulseSequence& seq) {
    if (seq.all_square()) return integrals_from_steps(square_steps(seq));
    return first_order_integrals(discretize(seq, 256));
}

std::pair<Vec3, Vec3> first_order_integrals(const PiecewiseConstantControl& control) {
    return integrals_from_steps(control_steps(control));
}

}  // namespace cpnoise
