#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "qmsd/basis.hpp"
#include "qmsd/errors.hpp"
#include "qmsd/exact_msd.hpp"
#include "qmsd/montecarlo.hpp"
#include "qmsd/system.hpp"
#include "qmsd/units.hpp"

using namespace qmsd;

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

struct Setup {
    PhysicalSystem sys;
    CharacteristicScales s;
    EigenBasis basis;
    double Q;

    Setup(int n_cells, int funcs)
        : sys(PhysicalSystem::from_user_units(28, 190, 256, n_cells)),
          s(derive_scales(sys)),
          basis(build_basis(sys, funcs)),
          Q(partition_function(basis)) {}
};

std::vector<double> random_phases(std::size_t K, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, two_pi);
    std::vector<double> p(K);
    for (double& v : p) v = u(rng);
    return p;
}

// Direct evaluation of sum_{n != j} rho_nj(t) x_jn in long double.
long double brute_force_x(const EigenBasis& b, double Q, const std::vector<double>& theta, double t) {
    const std::size_t K = b.size();
    const auto& E = b.energies();
    const long double hbar = PhysicalConstants::hbar;
    std::complex<long double> x{0.0L, 0.0L};
    for (std::size_t n = 0; n < K; ++n) {
        for (std::size_t j = 0; j < K; ++j) {
            if (n == j) continue;
            const long double mag = std::exp(-0.5L * b.beta() * (static_cast<long double>(E[n]) + E[j])) / Q;
            const long double phase = theta[n] - theta[j] - (static_cast<long double>(E[n]) - E[j]) * t / hbar;
            const std::complex<long double> rho = std::polar(mag, phase);
            const auto xe = x_element(b.index_at(j), b.index_at(n), b.length());
            x += rho * std::complex<long double>(xe.real(), xe.imag());
        }
    }
    return x.real();
}

std::vector<double> reflected(const std::vector<double>& theta) {
    std::vector<double> out(theta.size());
    for (std::size_t i = 0; i < theta.size(); ++i) out[i] = -theta[theta.size() - 1 - i];
    return out;
}

std::vector<double> negated(const std::vector<double>& theta) {
    std::vector<double> out(theta.size());
    for (std::size_t i = 0; i < theta.size(); ++i) out[i] = -theta[i];
    return out;
}

}  // namespace

TEST_CASE("phases are uniform on [0, 2 pi) and stream-separated") {
    MemberRng a(42, 0), b(42, 0), c(42, 1), d(42, 0, 1);
    double sum = 0.0;
    bool differs_member = false, differs_stream = false;
    for (int i = 0; i < 10000; ++i) {
        const double p = a.phase();
        CHECK(p >= 0.0);
        CHECK(p < two_pi);
        CHECK(p == b.phase());
        differs_member |= p != c.phase();
        differs_stream |= p != d.phase();
        sum += p;
    }
    CHECK(differs_member);
    CHECK(differs_stream);
    CHECK(sum / 10000.0 == doctest::Approx(std::numbers::pi).epsilon(0.02));
}

TEST_CASE("members are normalized") {
    Setup st(2, 100);
    for (std::uint64_t k = 0; k < 50; ++k) {
        const auto m = sample_member(st.basis, st.Q, 42, k);
        double norm = 0.0;
        for (const auto& c : m.amplitudes) norm += std::norm(c);
        CHECK(std::abs(norm - 1.0) < 1e-10);
        CHECK(m.phases.size() == st.basis.size());
    }
    const std::vector<double> wrong(3, 0.0);
    CHECK_THROWS_AS(make_member(st.basis, st.Q, wrong), ValidationError);
    const Setup other(3, 100);
    CHECK_THROWS_AS(position_expectation(sample_member(st.basis, st.Q, 1, 0), other.basis, 0.0), ValidationError);
}

TEST_CASE("position expectation against direct summation") {
    Setup st(1, 21);
    REQUIRE(st.basis.size() == 21);
    const double L = st.basis.length();

    const std::vector<double> zero(st.basis.size(), 0.0);
    const auto flat = make_member(st.basis, st.Q, zero);
    CHECK(std::abs(position_expectation(flat, st.basis, 0.0)) < 1e-14 * L);
    CHECK(std::abs(brute_force_x(st.basis, st.Q, zero, 0.0)) < 1e-14L * L);

    for (std::uint64_t seed : {1u, 2u, 3u}) {
        const auto theta = random_phases(st.basis.size(), seed);
        const auto m = make_member(st.basis, st.Q, theta);
        for (double f : {0.0, 0.3, 2.0, 17.0}) {
            const double t = f * st.s.t_b;
            CAPTURE(f);
            const double ref = static_cast<double>(brute_force_x(st.basis, st.Q, theta, t));
            CHECK(std::abs(position_expectation(m, st.basis, t) - ref) < 1e-12 * L);
        }
    }
}

TEST_CASE("time reversal") {
    Setup st(1, 21);
    const double L = st.basis.length();
    for (std::uint64_t seed : {4u, 5u}) {
        const auto theta = random_phases(st.basis.size(), seed);
        const auto m = make_member(st.basis, st.Q, theta);
        const auto m_neg = make_member(st.basis, st.Q, negated(theta));
        const auto m_ref = make_member(st.basis, st.Q, reflected(theta));
        for (double f : {0.5, 3.0, 11.0}) {
            const double t = f * st.s.t_b;
            const double backward = position_expectation(m, st.basis, -t);
            CHECK(std::abs(backward + position_expectation(m_neg, st.basis, t)) < 1e-12 * L);
            CHECK(std::abs(backward - position_expectation(m_ref, st.basis, t)) < 1e-12 * L);
        }
    }
}

TEST_CASE("phase averages vanish unless indices pair up") {
    constexpr std::size_t n_members = 4000;
    constexpr std::size_t K = 9;
    std::vector<std::vector<double>> theta(n_members);
    for (std::size_t k = 0; k < n_members; ++k) {
        MemberRng rng(42, k);
        theta[k].resize(K);
        for (double& p : theta[k]) p = rng.phase();
    }
    auto average = [&](int n, int j, int n2, int j2) {
        std::complex<double> s{0.0, 0.0};
        for (const auto& th : theta) s += std::polar(1.0, th[n] - th[j] + th[n2] - th[j2]);
        return s / static_cast<double>(n_members);
    };
    const double bound = 5.0 / std::sqrt(static_cast<double>(n_members));
    CHECK(std::abs(average(1, 2, 3, 4)) < bound);
    CHECK(std::abs(average(0, 5, 0, 6)) < bound);
    CHECK(std::abs(average(2, 1, 2, 1)) < bound);
    CHECK(std::abs(average(7, 8, 3, 3)) < bound);
    CHECK(std::abs(average(4, 4, 6, 6) - 1.0) < 1e-12);
    CHECK(std::abs(average(1, 1, 2, 2) - 1.0) < 1e-12);
    CHECK(std::abs(average(1, 2, 2, 1) - 1.0) < 1e-12);
}

TEST_CASE("ensemble off-diagonals decay as one over root n") {
    Setup st(1, 9);
    const std::size_t K = st.basis.size();
    const auto& w = st.basis.weights();
    for (std::size_t n_members : {1000u, 4000u}) {
        std::vector<std::complex<double>> mean(K * K, {0.0, 0.0});
        for (std::size_t k = 0; k < n_members; ++k) {
            const auto m = sample_member(st.basis, st.Q, 42, k);
            for (std::size_t n = 0; n < K; ++n)
                for (std::size_t j = 0; j < K; ++j) mean[n * K + j] += m.amplitudes[n] * std::conj(m.amplitudes[j]);
        }
        double rms = 0.0;
        int pairs = 0;
        for (std::size_t n = 0; n < K; ++n) {
            for (std::size_t j = 0; j < K; ++j) {
                const double scale = std::sqrt(w[n] * w[j]) / st.Q;
                const auto v = mean[n * K + j] / static_cast<double>(n_members) / scale;
                if (n == j) {
                    CHECK(std::abs(v - 1.0) < 1e-12);
                } else {
                    rms += std::norm(v);
                    ++pairs;
                }
            }
        }
        rms = std::sqrt(rms / pairs);
        CAPTURE(n_members);
        CHECK(rms * std::sqrt(static_cast<double>(n_members)) == doctest::Approx(1.0).epsilon(0.2));
    }
}

TEST_CASE("ensemble MSD agrees with the exact sum") {
    Setup st(2, 40);
    const auto grid = TimeGrid::linear(5.0 * st.s.t_b, 100.0 * st.s.t_b, 6);
    const auto r = sample_msd(st.basis, st.Q, grid, 4000, 42);
    REQUIRE(r.mean_msd.size() == 6);
    CHECK(r.n_members == 4000);
    CHECK(r.seed == 42);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double exact = msd_exact(st.basis, st.Q, grid[i]);
        CAPTURE(i);
        CHECK(r.std_error[i] > 0.0);
        CHECK(std::abs(r.mean_msd[i] - exact) <= 3.0 * r.std_error[i]);
    }
    const auto with_zero = sample_msd(st.basis, st.Q, TimeGrid({0.0, st.s.t_b}), 10, 1);
    CHECK(with_zero.mean_msd[0] == 0.0);
    CHECK(with_zero.std_error[0] == 0.0);
    CHECK_THROWS_AS(sample_msd(st.basis, st.Q, grid, 1, 42), ValidationError);
    CHECK_THROWS_AS(sample_msd(st.basis, st.Q, TimeGrid{}, 10, 42), ValidationError);
}

TEST_CASE("ensemble results are reproducible") {
    Setup st(2, 40);
    const auto grid = TimeGrid::linear(1.0 * st.s.t_b, 50.0 * st.s.t_b, 5);
    const auto a = sample_msd(st.basis, st.Q, grid, 300, 9, 1);
    const auto b = sample_msd(st.basis, st.Q, grid, 300, 9, 1);
    const auto c = sample_msd(st.basis, st.Q, grid, 300, 9, 4);
    CHECK(a.mean_msd == b.mean_msd);
    CHECK(a.std_error == b.std_error);
    CHECK(a.mean_msd == c.mean_msd);
    CHECK(a.std_error == c.std_error);
    const auto d = sample_msd(st.basis, st.Q, grid, 300, 10, 1);
    CHECK(a.mean_msd != d.mean_msd);

    const auto r1 = sample_msd_rerandomized(st.basis, st.Q, 300, 9, st.s.t_b, 1);
    const auto r2 = sample_msd_rerandomized(st.basis, st.Q, 300, 9, st.s.t_b, 3);
    CHECK(r1.mean == r2.mean);
    CHECK(r1.std_error == r2.std_error);
}

TEST_CASE("standard error scales as one over root n") {
    Setup st(2, 40);
    const auto grid = TimeGrid({20.0 * st.s.t_b, 60.0 * st.s.t_b});
    const auto small = sample_msd(st.basis, st.Q, grid, 1000, 42);
    const auto large = sample_msd(st.basis, st.Q, grid, 4000, 42);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double ratio = small.std_error[i] / large.std_error[i];
        CAPTURE(i);
        CHECK(ratio > 2.0 / 1.15);
        CHECK(ratio < 2.0 * 1.15);
    }
}

TEST_CASE("re-randomized estimate reproduces the plateau") {
    Setup s2(2, 40), s4(4, 40);
    const double breve = breve_sum(s2.basis, s2.Q);
    const auto r = sample_msd_rerandomized(s2.basis, s2.Q, 4000, 42, 10.0 * s2.s.t_b);
    CHECK(r.n_members == 4000);
    CHECK(r.t == 10.0 * s2.s.t_b);
    CHECK(std::abs(r.mean - breve) <= 3.0 * r.std_error);

    const auto later = sample_msd_rerandomized(s2.basis, s2.Q, 4000, 43, 500.0 * s2.s.t_b);
    CHECK(std::abs(r.mean - later.mean) <= 3.0 * std::hypot(r.std_error, later.std_error));

    const auto doubled = sample_msd_rerandomized(s4.basis, s4.Q, 4000, 44, 10.0 * s4.s.t_b);
    CHECK(std::abs(doubled.mean - 2.0 * r.mean) <= 3.0 * std::hypot(doubled.std_error, 2.0 * r.std_error));
    CHECK_THROWS_AS(sample_msd_rerandomized(s2.basis, s2.Q, 1, 42, 0.0), ValidationError);
}
