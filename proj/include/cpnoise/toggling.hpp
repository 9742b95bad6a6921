#pragma once

#include <utility>
#include <vector>

#include "cpnoise/linalg.hpp"
#include "cpnoise/pulses.hpp"

namespace cpnoise {

// Interaction picture defined by the ideal control. Lambda^(l-1) is the
// SO(3) adjoint image of the cumulative ideal propagator entering segment l,
// with components Tr[R'^dag sigma_i R' sigma_j]/2.
struct TogglingFrame {
    std::vector<Mat3> lambdas;           // Lambda^(0) .. Lambda^(n-1), one per segment
    Mat3 final_frame = Mat3::identity(); // Lambda^(n), after the full sequence
    std::vector<double> boundary_times;  // t_0 .. t_n
};

TogglingFrame toggling_matrices(const PulseSequence& seq);        // square pulses
TogglingFrame toggling_matrices(const PiecewiseConstantControl& control);

// Closed-form toggling-frame control vectors. On segment l (local time
// D = t - t_{l-1}):
//   rho_a(t) = 1/2 * tilde_a,                      tilde_a = rho_hat(phi_l) Lambda^(l-1)
//   rho_d(t) = 1/2 * [cos(W_l D) cz + sin(W_l D) sz]
// with cz = z_hat Lambda^(l-1) and sz = (-sin phi_l, cos phi_l, 0) Lambda^(l-1).
// The sign of the sin term is fixed by the 2x2 trace evaluation
// Tr[U0^dag(t,0) sigma_z U0(t,0) sigma_j]/2, which is the normative oracle.
struct ControlVectorTrajectory {
    struct SegmentVectors {
        double t_start = 0.0;
        double duration = 0.0;
        double rate = 0.0;  // W_l
        Vec3 amp_tilde;     // unit before the 1/2 factor
        Vec3 det_cos_axis;
        Vec3 det_sin_axis;
    };
    std::vector<SegmentVectors> segments;

    Vec3 rho_a(double t) const;
    Vec3 rho_d(double t) const;
    double total_duration() const;

private:
    const SegmentVectors& locate(double t) const;
};

ControlVectorTrajectory control_trajectories(const PulseSequence& seq);  // square pulses
ControlVectorTrajectory control_trajectories(const PiecewiseConstantControl& control);

// (integral of rho_a dt, integral of rho_d dt) over the full sequence, from
// exact per-segment antiderivatives. Shaped sequences route through a fine
// discretization.
std::pair<Vec3, Vec3> first_order_integrals(const PulseSequence& seq);
std::pair<Vec3, Vec3> first_order_integrals(const PiecewiseConstantControl& control);

}  // namespace cpnoise
