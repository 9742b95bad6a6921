#include "cpnoise/filterfn.hpp"

#include <cmath>
#include <stdexcept>

#include "cpnoise/quadrature.hpp"

namespace cpnoise {

std::string to_string(Quadrature q) {
    return q == Quadrature::amplitude ? "amplitude" : "detuning";
}

void FilterEvaluator::init(const ControlVectorTrajectory& traj, double peak) {
    boundaries_.push_back(0.0);
    for (const auto& sv : traj.segments) {
        Step st;
        st.t0 = sv.t_start;
        st.dt = sv.duration;
        st.rate = sv.rate;
        st.amp_tilde = sv.amp_tilde;
        st.det_cos = sv.det_cos_axis;
        st.det_sin = sv.det_sin_axis;
        st.mult_weight = peak > 0.0 ? sv.rate / peak : 0.0;
        steps_.push_back(st);
        boundaries_.push_back(sv.t_start + sv.duration);
    }
}

FilterEvaluator::FilterEvaluator(const PulseSequence& seq) {
    if (!seq.all_square())
        throw std::invalid_argument("FilterEvaluator: shaped sequences go through discretize()");
    init(control_trajectories(seq), seq.peak_amplitude());
}

FilterEvaluator::FilterEvaluator(const PiecewiseConstantControl& ctl) {
    init(control_trajectories(ctl), ctl.peak_amplitude);
}

// F_a = 1/4 { |sum_l A_l w_l tilde_l|^2 + |sum_l B_l w_l tilde_l|^2 } with
// A_l = cos(w t_l) - cos(w t_{l-1}) = -2 sin(w dt/2) sin(w tbar),
// B_l = sin(w t_l) - sin(w t_{l-1}) =  2 sin(w dt/2) cos(w tbar);
// the product form avoids cancellation within each term.
double FilterEvaluator::amplitude(double omega, NoiseModel model) const {
    if (model == NoiseModel::detuning)
        throw std::invalid_argument("FilterEvaluator::amplitude: detuning is not an amplitude model");
    const double w = std::abs(omega);
    Vec3 sum_a, sum_b;
    for (const auto& st : steps_) {
        const double weight =
            model == NoiseModel::multiplicative_amplitude ? st.mult_weight : 1.0;
        const double chord = 2.0 * std::sin(0.5 * w * st.dt);
        const double tbar = w * (st.t0 + 0.5 * st.dt);
        sum_a += (-chord * std::sin(tbar) * weight) * st.amp_tilde;
        sum_b += (chord * std::cos(tbar) * weight) * st.amp_tilde;
    }
    return 0.25 * (norm_sq(sum_a) + norm_sq(sum_b));
}

namespace {

// E(x, d) = int_0^d e^{i x u} du = d e^{i x d / 2} sinc(x d / 2); finite and
// smooth for all x, which also covers the removable point |omega| = W_l.
cplx phase_integral(double x, double d) {
    const double h = 0.5 * x * d;
    return d * sinc(h) * cplx(std::cos(h), std::sin(h));
}

struct CVec3 {
    cplx x{}, y{}, z{};
    void add(const cplx& c, const Vec3& v) {
        x += c * v.x;
        y += c * v.y;
        z += c * v.z;
    }
    double norm_sq() const { return std::norm(x) + std::norm(y) + std::norm(z); }
};

}  // namespace

double FilterEvaluator::detuning(double omega) const {
    const double w = std::abs(omega);
    CVec3 sum;
    for (const auto& st : steps_) {
        // int_0^d e^{iwu} cos(Wu) du and int_0^d e^{iwu} sin(Wu) du,
        // assembled from E(w +/- W, d)
        const cplx ep = phase_integral(w + st.rate, st.dt);
        const cplx em = phase_integral(w - st.rate, st.dt);
        const cplx ic = 0.5 * (ep + em);
        const cplx is = cplx(0.0, -0.5) * (ep - em);
        const cplx rot(std::cos(w * st.t0), std::sin(w * st.t0));
        sum.add(rot * ic, st.det_cos);
        sum.add(rot * is, st.det_sin);
    }
    return 0.25 * w * w * sum.norm_sq();
}

double ff_amplitude(const PulseSequence& seq, double omega) {
    return FilterEvaluator(seq).amplitude(omega);
}

double ff_detuning(const PulseSequence& seq, double omega) {
    return FilterEvaluator(seq).detuning(omega);
}

double ff_discretized(const PiecewiseConstantControl& ctl, double omega, NoiseModel model) {
    const FilterEvaluator ev(ctl);
    return model == NoiseModel::detuning ? ev.detuning(omega) : ev.amplitude(omega, model);
}

FilterFunctionCurve sample_curve(const PulseSequence& seq, const std::vector<double>& omegas,
                                 NoiseModel amplitude_model) {
    FilterFunctionCurve curve;
    curve.sequence = seq.name;
    curve.omegas = omegas;
    curve.F_a.reserve(omegas.size());
    curve.F_d.reserve(omegas.size());
    if (seq.all_square()) {
        const FilterEvaluator ev(seq);
        for (double w : omegas) {
            curve.F_a.push_back(ev.amplitude(w, amplitude_model));
            curve.F_d.push_back(ev.detuning(w));
        }
    } else {
        const FilterEvaluator ev(discretize(seq, 64));
        for (double w : omegas) {
            curve.F_a.push_back(ev.amplitude(w, amplitude_model));
            curve.F_d.push_back(ev.detuning(w));
        }
    }
    return curve;
}

double lowfreq_slope(const FilterFunctionCurve& curve, Quadrature q, double omega_lo,
                     double omega_hi) {
    const auto& f = q == Quadrature::amplitude ? curve.F_a : curve.F_d;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (std::size_t i = 0; i < curve.omegas.size(); ++i) {
        const double w = curve.omegas[i];
        if (w < omega_lo || w > omega_hi) continue;
        if (!(f[i] > 0.0) || !std::isfinite(f[i]))
            throw std::domain_error("lowfreq_slope: non-positive filter value in fit band");
        const double x = std::log(w);
        const double y = std::log(f[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++n;
    }
    if (n < 2) throw std::domain_error("lowfreq_slope: fewer than two points in fit band");
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) throw std::domain_error("lowfreq_slope: degenerate fit");
    return (n * sxy - sx * sy) / denom;
}

std::optional<double> crossover(const PulseSequence& seq, Quadrature q) {
    const double omega_max = seq.peak_amplitude();
    const FilterEvaluator cp(seq);
    const FilterEvaluator prim(
        build_sequence(SequenceId::primitive, seq.target_theta, omega_max));
    const auto diff = [&](double w) { return cp(w, q) - prim(w, q); };

    const auto grid = log_grid(1e-3 * omega_max, omega_max, 400);
    double prev_w = grid.front();
    double prev_d = diff(prev_w);
    if (prev_d >= 0.0) return std::nullopt;  // never below the primitive: no crossing to find
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double w = grid[i];
        const double d = diff(w);
        if (prev_d < 0.0 && d >= 0.0) {
            double lo = prev_w, hi = w;
            for (int it = 0; it < 100; ++it) {
                const double mid = 0.5 * (lo + hi);
                (diff(mid) < 0.0 ? lo : hi) = mid;
            }
            return 0.5 * (lo + hi);
        }
        prev_w = w;
        prev_d = d;
    }
    return std::nullopt;
}

}  // namespace cpnoise
