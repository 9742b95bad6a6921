#include "cpnoise/geometry.hpp"

#include <cmath>
#include <stdexcept>

#include "cpnoise/toggling.hpp"

namespace cpnoise {

std::string to_string(VectorChain::Kind k) {
    switch (k) {
        case VectorChain::Kind::static_closure: return "static";
        case VectorChain::Kind::a_chain: return "A";
        case VectorChain::Kind::b_chain: return "B";
    }
    return "?";
}

Vec3 VectorChain::sum() const {
    Vec3 s;
    for (const auto& t : terms) s += t;
    return s;
}

double VectorChain::total_length() const {
    double s = 0.0;
    for (const auto& t : terms) s += norm(t);
    return s;
}

double VectorChain::max_abs_z() const {
    double s = 0.0;
    for (const auto& t : terms) s = std::max(s, std::abs(t.z));
    return s;
}

VectorChain static_chain(const PulseSequence& seq) {
    if (!seq.all_square()) throw std::invalid_argument("static_chain: square pulses only");
    const auto traj = control_trajectories(seq);
    VectorChain chain;
    chain.kind = VectorChain::Kind::static_closure;
    chain.sequence = seq.name;
    for (const auto& sv : traj.segments)
        chain.terms.push_back((sv.rate * sv.duration) * sv.amp_tilde);
    return chain;
}

std::pair<VectorChain, VectorChain> frequency_chains(const PulseSequence& seq, double omega) {
    if (!seq.all_square()) throw std::invalid_argument("frequency_chains: square pulses only");
    if (!(omega > 0.0)) throw std::invalid_argument("frequency_chains: omega must be positive");
    const auto traj = control_trajectories(seq);
    VectorChain a, b;
    a.kind = VectorChain::Kind::a_chain;
    b.kind = VectorChain::Kind::b_chain;
    a.sequence = b.sequence = seq.name;
    a.omega = b.omega = omega;
    for (const auto& sv : traj.segments) {
        const double t0 = sv.t_start;
        const double t1 = sv.t_start + sv.duration;
        const double al = std::cos(omega * t1) - std::cos(omega * t0);
        const double bl = std::sin(omega * t1) - std::sin(omega * t0);
        a.terms.push_back((al / omega) * sv.amp_tilde);
        b.terms.push_back((bl / omega) * sv.amp_tilde);
    }
    return {a, b};
}

double ff_from_chains(const VectorChain& a_chain, const VectorChain& b_chain) {
    const double w = a_chain.omega;
    return 0.25 * w * w * (norm_sq(a_chain.sum()) + norm_sq(b_chain.sum()));
}

double crossover_bound(const PulseSequence& seq) {
    const double tau_p = seq.target_theta / seq.peak_amplitude();
    const double tau_cp = seq.total_duration();
    return 2.0 * tau_p / (tau_cp * tau_cp);
}

}  // namespace cpnoise
