#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cpnoise/filterfn.hpp"
#include "cpnoise/pulses.hpp"

using namespace cpnoise;
namespace {
constexpr double kPi = std::numbers::pi;
const double kOmega = 1.5e6;
}  // namespace

TEST_SUITE_BEGIN("pulses");

TEST_CASE("SK1 segments match the catalog at theta = pi") {
    const auto seq = build_sequence(SequenceId::sk1, kPi, kOmega);
    REQUIRE(seq.segments.size() == 3);
    const double phi1 = std::acos(-0.25);
    CHECK(phi1 == doctest::Approx(1.823476582).epsilon(1e-9));
    CHECK(seq.segments[0].angle() == doctest::Approx(kPi));
    CHECK(seq.segments[0].phase == 0.0);
    CHECK(seq.segments[1].angle() == doctest::Approx(2 * kPi));
    CHECK(seq.segments[1].phase == doctest::Approx(-phi1));
    CHECK(seq.segments[2].angle() == doctest::Approx(2 * kPi));
    CHECK(seq.segments[2].phase == doctest::Approx(phi1));
    for (const auto& s : seq.segments) CHECK(s.duration == doctest::Approx(s.angle() / kOmega));
}

TEST_CASE("CORPSE angles and phases at theta = pi") {
    const auto seq = build_sequence(SequenceId::corpse, kPi, kOmega);
    REQUIRE(seq.segments.size() == 3);
    // k = arcsin(sin(pi/2)/2) = pi/6
    CHECK(seq.segments[0].angle() == doctest::Approx(7.0 * kPi / 3.0));
    CHECK(seq.segments[1].angle() == doctest::Approx(5.0 * kPi / 3.0));
    CHECK(seq.segments[2].angle() == doctest::Approx(kPi / 3.0));
    CHECK(seq.segments[0].phase == 0.0);
    CHECK(seq.segments[1].phase == doctest::Approx(kPi));
    CHECK(seq.segments[2].phase == 0.0);
}

TEST_CASE("reduced CinBB is the CORPSE triple followed by the BB1 corrections") {
    const auto seq = build_sequence(SequenceId::cinbb, kPi, kOmega);
    REQUIRE(seq.segments.size() == 6);
    const double phi1 = std::acos(-0.25);
    CHECK(seq.segments[3].angle() == doctest::Approx(kPi));
    CHECK(seq.segments[3].phase == doctest::Approx(phi1));
    CHECK(seq.segments[4].angle() == doctest::Approx(2 * kPi));
    CHECK(seq.segments[4].phase == doctest::Approx(3 * phi1));
    CHECK(seq.segments[5].angle() == doctest::Approx(kPi));
    CHECK(seq.segments[5].phase == doctest::Approx(phi1));
}

TEST_CASE("DCG is the three-segment amplitude-modulated pi rotation") {
    const auto seq = build_sequence(SequenceId::dcg, kPi, kOmega);
    REQUIRE(seq.segments.size() == 3);
    const double tau = 4.0 * kPi / kOmega;
    CHECK(seq.total_duration() == doctest::Approx(tau));
    CHECK(seq.segments[0].duration == doctest::Approx(tau / 4));
    CHECK(seq.segments[1].duration == doctest::Approx(tau / 2));
    CHECK(seq.segments[2].duration == doctest::Approx(tau / 4));
    CHECK(seq.segments[1].amplitude == doctest::Approx(kOmega / 2));
    for (const auto& s : seq.segments) CHECK(s.phase == 0.0);
    // net rotation is R(3pi, 0) = -R(pi, 0)
    const Mat2 prod = ideal_product(seq);
    const Mat2 minus_target = rotation_su2(kPi, 0.0);
    CHECK(std::abs(prod.a00 + minus_target.a00) < 1e-12);
    CHECK(std::abs(prod.a10 + minus_target.a10) < 1e-12);
}

TEST_CASE("every sequence composes to its target up to a global phase") {
    for (int i = 1; i <= 10; ++i) {
        const double theta = 2.0 * kPi * i / 10.0;
        for (SequenceId id : {SequenceId::primitive, SequenceId::sk1, SequenceId::bb1,
                              SequenceId::corpse, SequenceId::cinsk, SequenceId::cinbb}) {
            const auto seq = build_sequence(id, theta, kOmega);
            CHECK(distance_up_to_phase(ideal_product(seq), rotation_su2(theta, 0.0)) < 1e-10);
            CHECK_NOTHROW(target_unitary(seq));
        }
    }
    CHECK_NOTHROW(target_unitary(build_sequence(SequenceId::dcg, kPi, kOmega)));
}

TEST_CASE("primitive pi target is -i sigma_x") {
    const auto u = target_unitary(build_sequence(SequenceId::primitive, kPi, kOmega));
    CHECK(std::abs(u.a00) < 1e-15);
    CHECK(std::abs(u.a01 - cplx(0.0, -1.0)) < 1e-15);
    CHECK(std::abs(u.a10 - cplx(0.0, -1.0)) < 1e-15);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(build_sequence("nosuch", kPi, kOmega), std::invalid_argument);
    CHECK_THROWS_AS(build_sequence(SequenceId::sk1, 0.0, kOmega), std::invalid_argument);
    CHECK_THROWS_AS(build_sequence(SequenceId::sk1, 7.0, kOmega), std::invalid_argument);
    CHECK_THROWS_AS(build_sequence(SequenceId::sk1, kPi, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(build_sequence(SequenceId::dcg, kPi / 2, kOmega), std::invalid_argument);
}

TEST_CASE("trapezoidalize keeps rotation angles and stretches durations") {
    SUBCASE("zero ramp is the identity") {
        const auto seq = build_sequence(SequenceId::sk1, kPi, kOmega);
        const auto shaped = trapezoidalize(seq, 0.0);
        REQUIRE(shaped.segments.size() == seq.segments.size());
        for (std::size_t i = 0; i < seq.segments.size(); ++i) {
            CHECK(shaped.segments[i].duration == seq.segments[i].duration);
            CHECK(shaped.segments[i].is_square());
        }
    }
    SUBCASE("primitive pi with r = 0.2 pi / omega") {
        const double r = 0.2 * kPi / kOmega;
        const auto shaped = trapezoidalize(build_sequence(SequenceId::primitive, kPi, kOmega), r);
        REQUIRE(shaped.segments.size() == 1);
        const auto& s = shaped.segments[0];
        CHECK(s.hold() == doctest::Approx(0.8 * kPi / kOmega));
        CHECK(s.duration == doctest::Approx(1.2 * kPi / kOmega));
        CHECK(s.angle() == doctest::Approx(kPi));
    }
    SUBCASE("DCG middle segment gets doubled ramp at half amplitude") {
        const double r1 = 0.1 * kPi / kOmega;
        const auto shaped = trapezoidalize(build_sequence(SequenceId::dcg, kPi, kOmega), r1);
        CHECK(shaped.segments[0].ramp == doctest::Approx(r1));
        CHECK(shaped.segments[1].ramp == doctest::Approx(2.0 * r1));
        CHECK(shaped.segments[1].amplitude == doctest::Approx(kOmega / 2));
        CHECK(shaped.segments[1].hold() == doctest::Approx(2.0 * shaped.segments[0].hold()));
        for (const auto& s : shaped.segments) CHECK(s.angle() == doctest::Approx(kPi));
    }
    SUBCASE("angles preserved across sequences and ramps") {
        // CORPSE's third segment is the shortest at theta = 0.7 pi (~0.2 pi / omega)
        for (double frac : {0.02, 0.06, 0.12}) {
            const double r = frac * kPi / kOmega;
            for (SequenceId id : {SequenceId::sk1, SequenceId::corpse, SequenceId::cinbb}) {
                const auto plain = build_sequence(id, 0.7 * kPi, kOmega);
                const auto shaped = trapezoidalize(plain, r);
                for (std::size_t i = 0; i < plain.segments.size(); ++i) {
                    CHECK(shaped.segments[i].angle() ==
                          doctest::Approx(plain.segments[i].angle()).epsilon(1e-14));
                    CHECK(shaped.segments[i].duration ==
                          doctest::Approx(plain.segments[i].duration + r).epsilon(1e-14));
                }
            }
        }
    }
    SUBCASE("overlong ramp rejected") {
        const auto seq = build_sequence(SequenceId::corpse, kPi, kOmega);
        // third segment lasts pi/(3 omega); any ramp >= that must throw
        CHECK_THROWS_AS(trapezoidalize(seq, kPi / (3.0 * kOmega)), std::invalid_argument);
    }
}

TEST_CASE("discretize: squares split 1:1 and ramps sample sub-step midpoints") {
    SUBCASE("square SK1 with one step per segment") {
        const auto seq = build_sequence(SequenceId::sk1, kPi, kOmega);
        const auto ctl = discretize(seq, 1);
        REQUIRE(ctl.steps.size() == 3);
        for (std::size_t i = 0; i < 3; ++i) {
            CHECK(ctl.steps[i].dt == doctest::Approx(seq.segments[i].duration));
            CHECK(ctl.steps[i].amplitude == seq.segments[i].amplitude);
            CHECK(ctl.steps[i].phase == seq.segments[i].phase);
        }
    }
    SUBCASE("r = w trapezoid primitive, 4 steps per section") {
        const double r = 0.5 * kPi / kOmega;  // hold equals ramp
        const auto shaped = trapezoidalize(build_sequence(SequenceId::primitive, kPi, kOmega), r);
        CHECK(shaped.segments[0].hold() == doctest::Approx(r));
        const auto ctl = discretize(shaped, 4);
        REQUIRE(ctl.steps.size() == 12);
        CHECK(ctl.steps[0].amplitude == doctest::Approx(kOmega / 8));
        CHECK(ctl.steps[1].amplitude == doctest::Approx(3 * kOmega / 8));
        CHECK(ctl.steps[2].amplitude == doctest::Approx(5 * kOmega / 8));
        CHECK(ctl.steps[3].amplitude == doctest::Approx(7 * kOmega / 8));
        CHECK(ctl.steps[4].amplitude == doctest::Approx(kOmega));
        CHECK(ctl.steps[11].amplitude == doctest::Approx(kOmega / 8));
    }
    SUBCASE("total time preserved exactly") {
        for (SequenceId id : {SequenceId::sk1, SequenceId::corpse, SequenceId::dcg}) {
            const auto seq = trapezoidalize(build_sequence(id, kPi, kOmega), 0.07 * kPi / kOmega);
            for (int n : {3, 16, 64}) {
                const auto ctl = discretize(seq, n);
                CHECK(std::abs(ctl.total_duration() - seq.total_duration()) <
                      1e-12 * seq.total_duration());
                for (const auto& st : ctl.steps) CHECK(st.dt > 0.0);
            }
        }
    }
    SUBCASE("rejects zero steps") {
        CHECK_THROWS_AS(discretize(build_sequence(SequenceId::sk1, kPi, kOmega), 0),
                        std::invalid_argument);
    }
}

TEST_CASE("trapezoid FF converges in the discretization: n = 64 vs 128 within 1%") {
    const auto shaped =
        trapezoidalize(build_sequence(SequenceId::corpse, kPi, kOmega), 0.25 * kPi / kOmega);
    const FilterEvaluator coarse(discretize(shaped, 64));
    const FilterEvaluator fine(discretize(shaped, 128));
    for (double wo : {1e-3, 1e-2, 0.1, 0.5, 1.0}) {
        const double w = wo * kOmega;
        CHECK(coarse.detuning(w) == doctest::Approx(fine.detuning(w)).epsilon(0.01));
        CHECK(coarse.amplitude(w) == doctest::Approx(fine.amplitude(w)).epsilon(0.01));
    }
}

TEST_SUITE_END();
