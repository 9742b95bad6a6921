#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cpnoise/analytic.hpp"
#include "cpnoise/errors.hpp"
#include "cpnoise/mcsim.hpp"

using namespace cpnoise;
namespace {
constexpr double kPi = std::numbers::pi;
const double kOmega = 1.5e6;
const NoiseSpectrum kNone;
}  // namespace

TEST_SUITE_BEGIN("analytic");

TEST_CASE("SK1 amplitude coefficient matches the closed form") {
    const auto seq = build_sequence(SequenceId::sk1, kPi, kOmega);
    const auto c = dc_coefficient(seq, DcQuadrature::amplitude, 1);
    const double phi1 = std::acos(-0.25);
    const double expect = std::pow(kPi * kPi * std::sin(2.0 * phi1), 2);  // ~22.83
    CHECK(expect == doctest::Approx(22.83).epsilon(1e-3));
    CHECK(c.c == doctest::Approx(expect).epsilon(0.01));
    CHECK(c.fit_residual < 0.01);
}

TEST_CASE("primitive amplitude deficit is exactly linear") {
    const auto seq = build_sequence(SequenceId::primitive, kPi, kOmega);
    for (double rel : {1e-3, 5e-4}) {
        const double lam = dc_deficit_angle(seq, rel * kOmega, 0.0);
        CHECK(lam == doctest::Approx(0.5 * kPi * rel).epsilon(1e-9));
    }
    const auto c = dc_coefficient(seq, DcQuadrature::amplitude, 0);
    CHECK(c.c == doctest::Approx(kPi * kPi / 4.0).epsilon(1e-6));
}

TEST_CASE("wrong suppression order is detected") {
    const auto prim = build_sequence(SequenceId::primitive, kPi, kOmega);
    CHECK_THROWS_AS(dc_coefficient(prim, DcQuadrature::amplitude, 1), numerical_error);
    const auto sk1 = build_sequence(SequenceId::sk1, kPi, kOmega);
    CHECK_THROWS_AS(dc_coefficient(sk1, DcQuadrature::amplitude, 0), numerical_error);
}

TEST_CASE("fitted orders match the design table") {
    for (SequenceId id : {SequenceId::primitive, SequenceId::sk1, SequenceId::bb1,
                          SequenceId::corpse, SequenceId::cinsk, SequenceId::cinbb,
                          SequenceId::dcg}) {
        const auto seq = build_sequence(id, kPi, kOmega);
        for (Quadrature q : {Quadrature::amplitude, Quadrature::detuning}) {
            const int m = dc_design_order(id, q);
            const DcQuadrature dq =
                q == Quadrature::amplitude ? DcQuadrature::amplitude : DcQuadrature::detuning;
            const auto c = dc_coefficient(seq, dq, m);
            CHECK(c.fit_residual < 0.01);
            CHECK(c.c > 0.0);
        }
    }
}

TEST_CASE("coefficients are stable under halving of the fit amplitude") {
    // same fit with the grid scaled by 1/2 must move c by < 1%
    const auto seq = build_sequence(SequenceId::sk1, kPi, kOmega);
    const auto full = dc_coefficient(seq, DcQuadrature::amplitude, 1);
    double lam_half[2];
    int k = 0;
    for (double x : {5e-4, 2.5e-4}) {
        double acc = 0.0;
        for (double s : {1.0, -1.0}) {
            const double l = dc_deficit_angle(seq, s * x * kOmega, 0.0);
            acc += 0.5 * l * l;
        }
        lam_half[k++] = acc / std::pow(x, 4);
    }
    CHECK(lam_half[0] == doctest::Approx(full.c).epsilon(0.01));
    CHECK(lam_half[1] == doctest::Approx(full.c).epsilon(0.01));
}

TEST_CASE("CinBB cross coefficient is positive with a clean fit") {
    const auto seq = build_sequence(SequenceId::cinbb, kPi, kOmega);
    const auto c = dc_coefficient(seq, DcQuadrature::cross, 1);
    CHECK(c.c > 0.0);
    CHECK(c.fit_residual < 0.01);
}

TEST_CASE("dc loss: zero spectra, scaling laws") {
    const auto sk1 = build_sequence(SequenceId::sk1, kPi, kOmega);
    CHECK(dc_fidelity_loss(sk1, kNone, kNone) == 0.0);

    const auto weak = NoiseSpectrum::one_over_f_with_rolloff(1e7, 2.0 * kPi, 1.5e4, 4.5e9,
                                                             SpectralConvention::paper_moment);
    const auto strong = NoiseSpectrum::one_over_f_with_rolloff(2e7, 2.0 * kPi, 1.5e4, 4.5e9,
                                                               SpectralConvention::paper_moment);
    // first-order sequence: quartic in the noise scale (quadratic in power)
    const double r_sk1 = dc_fidelity_loss(sk1, strong, kNone) / dc_fidelity_loss(sk1, weak, kNone);
    CHECK(r_sk1 == doctest::Approx(4.0).epsilon(1e-6));
    // primitive: quadratic in the noise scale (linear in power)
    const auto prim = build_sequence(SequenceId::primitive, kPi, kOmega);
    const double r_prim =
        dc_fidelity_loss(prim, strong, kNone) / dc_fidelity_loss(prim, weak, kNone);
    CHECK(r_prim == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("dc loss combines both axes and the cross term for CinBB") {
    const auto seq = build_sequence(SequenceId::cinbb, kPi, kOmega);
    const auto spec = NoiseSpectrum::benchmark_1of(1.5e4);
    const auto parts = dc_fidelity_loss_parts(seq, spec, spec);
    CHECK(parts.amplitude > 0.0);
    CHECK(parts.detuning > 0.0);
    CHECK(parts.cross > 0.0);
    const auto single_a = dc_fidelity_loss_parts(seq, spec, kNone);
    CHECK(single_a.cross == 0.0);
    CHECK(single_a.amplitude == doctest::Approx(parts.amplitude));
}

TEST_CASE("spectral-overlap loss: zero spectra and linearity in S") {
    const auto seq = build_sequence(SequenceId::sk1, kPi, kOmega);
    CHECK(ff_fidelity_loss(seq, kNone, kNone) == 0.0);
    const auto s1 = NoiseSpectrum::one_over_f_with_rolloff(1e7, 2.0 * kPi, 1.5e4, 4.5e9,
                                                           SpectralConvention::paper_moment);
    const auto s2 = NoiseSpectrum::one_over_f_with_rolloff(2e7, 2.0 * kPi, 1.5e4, 4.5e9,
                                                           SpectralConvention::paper_moment);
    const double l1 = ff_fidelity_loss(seq, s1, kNone);
    const double l2 = ff_fidelity_loss(seq, s2, kNone);
    CHECK(l2 == doctest::Approx(2.0 * l1).epsilon(1e-9));
    // additive across quadratures
    const double both = ff_fidelity_loss(seq, s1, s1);
    const double da = ff_fidelity_loss(seq, s1, kNone);
    const double dd = ff_fidelity_loss(seq, kNone, s1);
    CHECK(both == doctest::Approx(da + dd).epsilon(1e-12));
}

TEST_CASE("narrow flat band against the closed-form overlap") {
    // band where F_a/w^2 ~ tau^2/4 for the primitive: loss = 2 h dw tau^2/4
    const auto seq = build_sequence(SequenceId::primitive, kPi, kOmega);
    const double w1 = 1e-4 * kOmega, w2 = 2e-4 * kOmega, h = 5.0;
    const auto band = NoiseSpectrum::tabulated({w1, w2}, {h, h}, SpectralConvention::paper_moment);
    const double tau = kPi / kOmega;
    const double closed = 2.0 * h * (w2 - w1) * tau * tau / 4.0;
    const double numeric = ff_fidelity_loss(seq, band, kNone);
    CHECK(numeric == doctest::Approx(closed).epsilon(1e-6));
}

TEST_CASE("wiener_khinchin convention carries the 1/2pi into the loss") {
    const auto seq = build_sequence(SequenceId::sk1, kPi, kOmega);
    const auto paper = NoiseSpectrum::benchmark_1of(1.5e4, SpectralConvention::paper_moment);
    const auto wk = NoiseSpectrum::benchmark_1of(1.5e4, SpectralConvention::wiener_khinchin);
    const double lp = ff_fidelity_loss(seq, paper, kNone);
    const double lw = ff_fidelity_loss(seq, wk, kNone);
    CHECK(lp == doctest::Approx(2.0 * kPi * lw).epsilon(1e-9));
}

TEST_CASE("combined estimate takes the larger of the two routes") {
    const auto seq = build_sequence(SequenceId::sk1, kPi, kOmega);
    SUBCASE("fast knee: overlap dominates") {
        const auto spec = NoiseSpectrum::benchmark_1of(1e-1 * kOmega);
        const auto est = combined_estimate(seq, spec, kNone);
        CHECK(est.combined == est.ff_loss);
        CHECK(est.ff_loss > est.dc_loss);
    }
    SUBCASE("slow knee: dc floor dominates") {
        const auto spec = NoiseSpectrum::benchmark_1of(1e-3 * kOmega);
        const auto est = combined_estimate(seq, spec, kNone);
        CHECK(est.combined == est.dc_loss);
        CHECK(est.dc_loss > est.ff_loss);
    }
    SUBCASE("combined is always the max") {
        const auto spec = NoiseSpectrum::benchmark_1of(1e-2 * kOmega);
        const auto est = combined_estimate(seq, spec, kNone);
        CHECK(est.combined == std::max(est.ff_loss, est.dc_loss));
    }
}

TEST_CASE("benchmark dc floors land on the quoted values under wiener_khinchin") {
    // Under paper_moment the quoted floors are missed by ~2 orders; the
    // re-check under wiener_khinchin brings both within +-50%.
    const auto wk_a = NoiseSpectrum::benchmark_1of(1.5e4, SpectralConvention::wiener_khinchin);
    const double bb1 = dc_fidelity_loss(build_sequence(SequenceId::bb1, kPi, kOmega), wk_a, kNone);
    CHECK(bb1 > 0.5 * 3.9e-9);
    CHECK(bb1 < 1.5 * 3.9e-9);
    const double corpse =
        dc_fidelity_loss(build_sequence(SequenceId::corpse, kPi, kOmega), kNone, wk_a);
    CHECK(corpse > 0.5 * 3.0e-9);
    CHECK(corpse < 1.5 * 3.0e-9);
}

TEST_CASE("MC ensemble sits within a factor two of the combined estimate") {
    const auto seq = build_sequence(SequenceId::sk1, kPi, kOmega);
    const auto spec = NoiseSpectrum::benchmark_1of(1e-2 * kOmega);
    const auto est = combined_estimate(seq, spec, kNone);
    EnsembleOptions opts;
    opts.realizations = 2000;
    opts.seed = 314159;
    const auto mc = ensemble(seq, spec, kNone, opts);
    CHECK(est.combined > 3.0 * mc.std_error);
    const double ratio = std::max(mc.mean_loss / est.combined, est.combined / mc.mean_loss);
    CHECK(ratio < 2.0);
}

TEST_SUITE_END();
