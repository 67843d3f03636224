#include <doctest.h>

#include <cmath>
#include <numbers>
#include <utility>

#include "qmsd/basis.hpp"
#include "qmsd/closed_forms.hpp"
#include "qmsd/errors.hpp"
#include "qmsd/exact_msd.hpp"
#include "qmsd/ideal.hpp"
#include "qmsd/system.hpp"
#include "qmsd/units.hpp"
#include "quadrature.hpp"

using namespace qmsd;
using qmsd::testing::integrate;
using qmsd::testing::integrate_panels;
using qmsd::testing::integrate_to_infinity;

namespace {

constexpr double pi = std::numbers::pi;
constexpr double sqrt2 = std::numbers::sqrt2;

// Reference values computed with 40-digit arithmetic.
constexpr std::pair<double, double> kErfTable[] = {
    {0, 0.0},
    {1e-300, 1.12837916709551257389615890312e-300},
    {1e-12, 1.128379167095512573896158527e-12},
    {1e-6, 0.00000112837916709513644750712717843},
    {0.001, 0.0011283787909692363799484776569},
    {0.1, 0.112462916018284892203275071744},
    {0.25, 0.276326390168236932985068267765},
    {0.5, 0.520499877813046537682746653892},
    {0.75, 0.711155633653515131598937834591},
    {1, 0.842700792949714869341220635083},
    {1.25, 0.922900128256458230136523481197},
    {1.5, 0.966105146475310727066976261646},
    {2, 0.995322265018952734162069256367},
    {2.5, 0.99959304798255504106043578426},
    {3, 0.99997790950300141455862722387},
    {3.5, 0.999999256901627658587254476316},
    {4, 0.99999998458274209971998114784},
    {5, 0.99999999999846254020557196515},
    {6, 0.999999999999999978480263287501},
    {-0.5, -0.520499877813046537682746653892},
    {-2, -0.995322265018952734162069256367},
    {-1e-8, -0.0000000112837916709551253628351999994},
};

// Integrand of the defining integral of J: 2 e^{-y x^2} ((sin s - s cos s) / x^2)^2, s = x / sqrt(2).
double j_integrand(double y, double x) {
    const double s = x / sqrt2;
    double g;
    if (s < 1e-2) {
        const double s2 = s * s;
        g = s * s2 * (1.0 / 3.0 - s2 * (1.0 / 30.0 - s2 / 840.0));
    } else {
        g = std::sin(s) - s * std::cos(s);
    }
    const double bracket = x == 0.0 ? 0.0 : g / (x * x);
    return 2.0 * std::exp(-y * x * x) * bracket * bracket;
}

double j_quadrature(double y) {
    const double upper = std::sqrt(60.0 / y);
    return integrate_panels([y](double x) { return j_integrand(y, x); }, 0.0, upper, 2.0 * pi * sqrt2, 1e-13);
}

double i_quadrature(double a, double b) {
    auto f = [a, b](double x) {
        if (x == 0.0) return a;
        return std::exp(-b * x * x) * -std::expm1(-a * x * x) / (x * x);
    };
    return integrate_to_infinity(f, 0.0, 1e-13);
}

struct Co {
    PhysicalSystem sys;
    CharacteristicScales s;
    explicit Co(int cells) : sys(PhysicalSystem::from_user_units(28, 190, 256, cells)), s(derive_scales(sys)) {}
};

}  // namespace

TEST_CASE("quadrature oracle sanity") {
    CHECK(integrate([](double x) { return std::sin(x); }, 0.0, pi) == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(integrate_to_infinity([](double x) { return std::exp(-x * x); }, 0.0) ==
          doctest::Approx(std::sqrt(pi) / 2.0).epsilon(1e-12));
    CHECK(integrate_panels([](double x) { return std::cos(x) * std::cos(x); }, 0.0, 100.0 * pi, 3.0) ==
          doctest::Approx(50.0 * pi).epsilon(1e-12));
}

TEST_CASE("erf against high-precision table") {
    for (auto [x, ref] : kErfTable) {
        CAPTURE(x);
        CHECK(std::abs(qmsd::erf(x) - ref) <= 1e-12);
        if (std::abs(x) < 1e-3) CHECK(qmsd::erf(x) == doctest::Approx(ref).epsilon(1e-14));
    }
    CHECK(qmsd::erf(0.0) == 0.0);
    CHECK(std::abs(qmsd::erf(10.0) - 1.0) <= 1e-15);
    CHECK(qmsd::erf(1.0) == doctest::Approx(0.8427007929497149).epsilon(1e-15));
    for (double x = 0.01; x < 6.0; x += 0.37) CHECK(qmsd::erf(-x) == -qmsd::erf(x));
}

TEST_CASE("erf matches quadrature of its defining integral") {
    for (double x : {0.3, 1.0, 2.2}) {
        const double q = 2.0 / std::sqrt(pi) * integrate([](double y) { return std::exp(-y * y); }, 0.0, x);
        CHECK(std::abs(qmsd::erf(x) - q) < 1e-13);
    }
}

TEST_CASE("J examples") {
    CHECK(std::abs(J(0.0) - sqrt2 * pi / 12.0) < 1e-14);
    CHECK(J(1e6) < 1e-3);
    CHECK(J(1e6) > 0.0);
    CHECK_THROWS_AS(J(-1e-3), ValidationError);
    CHECK(std::abs(J(0.5) - j_quadrature(0.5)) < 1e-9);
}

TEST_CASE("J closed form matches quadrature over six decades") {
    for (double y : {1e-6, 1e-3, 0.1, 1.0, 10.0, 1e3}) {
        CAPTURE(y);
        CHECK(std::abs(J(y) - j_quadrature(y)) < 1e-8);
    }
}

TEST_CASE("J is smooth and decreasing") {
    double prev = J(0.0);
    for (double y = 1e-4; y < 1e4; y *= 1.07) {
        const double v = J(y);
        CHECK(v < prev);
        CHECK(v > 0.0);
        prev = v;
    }
    // Across the internal switch between the two evaluation branches.
    const double below = J(std::nextafter(2.0, 0.0)), at = J(2.0);
    CHECK(below == doctest::Approx(at).epsilon(1e-13));
    CHECK(J(1.0) == doctest::Approx(0.010644298123947474).epsilon(1e-13));
    CHECK(J(1e3) == doctest::Approx(3.89177122068604225e-7).epsilon(1e-12));
}

TEST_CASE("I(a, b)") {
    CHECK(I_ab(0.0, 1.0) == 0.0);
    CHECK(I_ab(3.0, 1.0) == doctest::Approx(std::sqrt(pi)).epsilon(1e-15));
    CHECK(I_ab(1e8, 1.0) / std::sqrt(pi * 1e8) == doctest::Approx(1.0).epsilon(1e-4));
    CHECK(I_ab(1e-12, 1.0) == doctest::Approx(std::sqrt(pi) * 0.5e-12).epsilon(1e-10));
    CHECK_THROWS_AS(I_ab(1.0, 0.0), ValidationError);
    CHECK_THROWS_AS(I_ab(-1.0, 1.0), ValidationError);
    for (double a : {0.0, 0.1, 1.0, 3.0, 10.0, 100.0}) {
        for (double b : {0.01, 0.5, 1.0, 5.0}) {
            CAPTURE(a);
            CAPTURE(b);
            CHECK(std::abs(I_ab(a, b) - i_quadrature(a, b)) < 1e-8);
        }
    }
}

TEST_CASE("closed plateau") {
    Co c10(10);
    const auto basis = build_basis(c10.sys, 100);
    const double sum = breve_sum(basis, partition_function(basis));
    const double closed = breve_closed(c10.sys, c10.s);
    const double a2 = c10.sys.lattice_a * c10.sys.lattice_a;
    CHECK(closed / a2 == doctest::Approx(0.11).epsilon(0.05));
    CHECK(closed == doctest::Approx(sum).epsilon(0.02));

    Co big(10000);
    const double limit = PhysicalConstants::hbar * std::sqrt(pi * big.s.beta / big.sys.mass) / 6.0;
    CHECK(breve_closed(big.sys, big.s) / big.sys.length() == doctest::Approx(limit).epsilon(1e-3));

    double prev_ratio = 3.0;
    for (int cells : {1, 4, 16, 64, 256}) {
        Co one(cells), two(2 * cells);
        const double ratio = breve_closed(two.sys, two.s) / breve_closed(one.sys, one.s);
        CHECK(ratio > 2.0);
        CHECK(ratio < prev_ratio);
        prev_ratio = ratio;
    }
    CHECK(prev_ratio == doctest::Approx(2.0).epsilon(1e-3));
}

TEST_CASE("collision model") {
    Co c10(10);
    const auto p = CollisionModelParams::from(0.35, c10.sys, c10.s);
    const auto ideal = IdealMsdParams::from(c10.sys, c10.s);
    const double plateau = breve_closed(c10.sys, c10.s);
    const double tb = c10.s.t_b;

    CHECK(msd_collision_model(p, 0.0) == 0.0);
    CHECK(msd_collision_model(p, 1e-6 * tb) == doctest::Approx(msd_ideal(ideal, 1e-6 * tb)).epsilon(1e-12));
    CHECK_THROWS_AS(msd_collision_model(p, -tb), ValidationError);
    CHECK_THROWS_AS(CollisionModelParams::from(0.0, c10.sys, c10.s), ValidationError);

    // Both parameterizations of the free-flight term agree.
    for (double f : {1e-4, 0.3, 1.0, 10.0, 1e3}) {
        const double t = f * tb, s = f;
        const double vt = c10.s.v_T * tb;
        const double form = vt * vt * s * s / (std::sqrt(s * s + 1.0) + 1.0);
        CHECK(form == doctest::Approx(msd_ideal(ideal, t)).epsilon(1e-12));
    }

    auto stiff = p;
    stiff.alpha = 1e3;
    for (double f = 0.1; f <= 10.0; f += 0.7) {
        CHECK(msd_collision_model(stiff, f * tb) == doctest::Approx(msd_ideal(ideal, f * tb)).epsilon(1e-6));
    }

    // Convex blend: always between the ideal curve and the plateau.
    for (double f = 0.5; f < 3000.0; f *= 1.3) {
        const double v = msd_collision_model(p, f * tb), id = msd_ideal(ideal, f * tb);
        CHECK(v >= std::min(id, plateau) * (1.0 - 1e-12));
        CHECK(v <= std::max(id, plateau) * (1.0 + 1e-12));
    }

    // Far past the collision time the collided weight tends to one, but the slow tail
    // of free flights keeps a finite share erf(c/t) * ideal(t) -> alpha L hbar sqrt(2/pi) / (m v_T).
    const double t = 1e9 * tb;
    const double arg = p.alpha * p.L / (sqrt2 * p.v_T * t);
    CHECK(std::erfc(arg) == doctest::Approx(1.0).epsilon(1e-6));
    const double tail = p.alpha * p.L * PhysicalConstants::hbar * std::sqrt(2.0 / pi) / (c10.sys.mass * p.v_T);
    CHECK(msd_collision_model(p, t) == doctest::Approx(plateau + tail).epsilon(1e-6));
    CHECK(msd_collision_model(p, t) - std::erf(arg) * msd_ideal(ideal, t) ==
          doctest::Approx(plateau).epsilon(1e-6));

    const auto curve = msd_collision_model_curve(p, TimeGrid::linear(0.0, 30.0 * tb, 31));
    CHECK(curve.method == Method::CollisionModel);
    CHECK(curve.values[0] == 0.0);
    CHECK(curve.values[10] == msd_collision_model(p, curve.times[10]));
}

TEST_CASE("Maxwell-Boltzmann speed density") {
    const double vT = 237.5;
    CHECK(maxwell_boltzmann_pdf(0.0, vT) == doctest::Approx(std::sqrt(2.0 / pi) / vT).epsilon(1e-15));
    auto p = [vT](double v) { return maxwell_boltzmann_pdf(v, vT); };
    CHECK(std::abs(integrate_to_infinity(p, 0.0, 1e-14) - 1.0) < 1e-10);
    const double second = integrate_to_infinity([&](double v) { return v * v * p(v); }, 0.0, 1e-10);
    CHECK(std::abs(second - vT * vT) / (vT * vT) < 1e-9);
    CHECK_THROWS_AS(maxwell_boltzmann_pdf(-1.0, vT), ValidationError);
    CHECK_THROWS_AS(maxwell_boltzmann_pdf(1.0, 0.0), ValidationError);
}
