#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cpnoise/pulses.hpp"

namespace cpnoise {

// End-to-end vector picture of amplitude-error suppression. The static
// chain has one term theta_l * tilde_l per segment and closes (defect ~ 0)
// exactly when the sequence cancels first-order amplitude error. The
// frequency chains carry A_l(w)/w and B_l(w)/w factors and close only while
// w stays well below the crossover.
struct VectorChain {
    enum class Kind { static_closure, a_chain, b_chain };
    Kind kind = Kind::static_closure;
    double omega = 0.0;  // rad/s; zero for the static chain
    std::string sequence;
    std::vector<Vec3> terms;

    Vec3 sum() const;
    double closure_defect() const { return norm(sum()); }
    double total_length() const;
    // x-y projection is faithful when all terms stay equatorial
    double max_abs_z() const;
};

std::string to_string(VectorChain::Kind k);

VectorChain static_chain(const PulseSequence& seq);
std::pair<VectorChain, VectorChain> frequency_chains(const PulseSequence& seq, double omega);

// F_a rebuilt from the chains: (w^2 / 4) (|sum A|^2 + |sum B|^2).
double ff_from_chains(const VectorChain& a_chain, const VectorChain& b_chain);

// Crossover estimate from the small-w envelope bound: solves
// (w tau_P)^2 / 4 = (w tau_CP)^4 / 16 as w = 2 tau_P / tau_CP^2, with
// tau_P = theta / W and tau_CP the full sequence duration. A lower bound on
// the actual crossover for the amplitude-correcting sequences.
double crossover_bound(const PulseSequence& seq);

}  // namespace cpnoise
