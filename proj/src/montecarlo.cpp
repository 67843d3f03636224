#include "qmsd/montecarlo.hpp"

#include <cmath>
#include <numbers>

#include "qmsd/errors.hpp"
#include "qmsd/parallel.hpp"
#include "qmsd/units.hpp"

namespace qmsd {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

struct Moments {
    double mean = 0.0;
    double std_error = 0.0;
};

// Two-pass mean and sample standard error, in member order.
Moments moments(const std::vector<double>& samples) {
    const double n = static_cast<double>(samples.size());
    const double mean =
        pairwise_sum(0, samples.size(), [&](std::size_t i) { return samples[i]; }) / n;
    const double ss = pairwise_sum(0, samples.size(), [&](std::size_t i) {
        const double d = samples[i] - mean;
        return d * d;
    });
    return {mean, std::sqrt(ss / (n - 1.0)) / std::sqrt(n)};
}

void check_members(std::size_t n_members) {
    if (n_members < 2) throw ValidationError("n_members", "must be at least 2");
}

}  // namespace

MemberRng::MemberRng(std::uint64_t seed, std::uint64_t member, std::uint64_t stream)
    : engine_(splitmix64(splitmix64(splitmix64(seed) ^ member) ^ stream)) {}

double MemberRng::phase() {
    constexpr double kUnit = 1.0 / 9007199254740992.0;  // 2^-53
    return 2.0 * std::numbers::pi * static_cast<double>(engine_() >> 11) * kUnit;
}

ThermalMember make_member(const EigenBasis& basis, double Q, std::span<const double> phases) {
    if (phases.size() != basis.size()) {
        throw ValidationError("phases", "size does not match the basis");
    }
    if (!(Q > 0.0)) throw ValidationError("Q", "must be positive");
    ThermalMember m;
    m.phases.assign(phases.begin(), phases.end());
    m.amplitudes.resize(phases.size());
    const double norm = 1.0 / std::sqrt(Q);
    const auto& E = basis.energies();
    for (std::size_t i = 0; i < phases.size(); ++i) {
        m.amplitudes[i] = std::polar(norm * std::exp(-0.5 * basis.beta() * E[i]), phases[i]);
    }
    return m;
}

ThermalMember sample_member(const EigenBasis& basis, double Q, std::uint64_t seed,
                            std::uint64_t member, std::uint64_t stream) {
    MemberRng rng(seed, member, stream);
    std::vector<double> phases(basis.size());
    for (double& p : phases) p = rng.phase();
    return make_member(basis, Q, phases);
}

double position_expectation(const ThermalMember& member, const EigenBasis& basis, double t) {
    const std::size_t K = basis.size();
    if (member.amplitudes.size() != K) {
        throw ValidationError("member", "built on a different basis");
    }

    // b_n = c_n e^{-i E_n t / hbar}, rho_nj = b_n conj(b_j).
    std::vector<std::complex<double>> b(K);
    const auto& E = basis.energies();
    for (std::size_t i = 0; i < K; ++i) {
        b[i] = member.amplitudes[i] * std::polar(1.0, -E[i] * t / PhysicalConstants::hbar);
    }

    // x_jn = i g(j - n) with g(d) = (-1)^(d+1) L / (2 pi d).
    std::vector<double> g(2 * K - 1, 0.0);
    const double scale = basis.length() / (2.0 * std::numbers::pi);
    for (std::size_t k = 0; k < g.size(); ++k) {
        const long d = static_cast<long>(k) - static_cast<long>(K - 1);
        if (d != 0) g[k] = ((d % 2 == 0) ? -scale : scale) / static_cast<double>(d);
    }

    std::complex<double> x{0.0, 0.0};
    double magnitude = 0.0;
    for (std::size_t n = 0; n < K; ++n) {
        // y_n = sum_j conj(b_j) x_jn; conj(b) * i g = g (Im b + i Re b)
        double yr = 0.0;
        double yi = 0.0;
        const double* gn = g.data() + (K - 1) - n;
        for (std::size_t j = 0; j < K; ++j) {
            yr += gn[j] * b[j].imag();
            yi += gn[j] * b[j].real();
        }
        const std::complex<double> term = b[n] * std::complex<double>(yr, yi);
        x += term;
        magnitude += std::abs(term);
    }

    // Residue measured against the size of the summed terms, so x near 0 is fine.
    if (std::abs(x.imag()) > 1e-10 * magnitude) {
        throw NumericalError("position expectation has a non-negligible imaginary part");
    }
    return x.real();
}

EnsembleResult sample_msd(const EigenBasis& basis, double Q, const TimeGrid& grid,
                          std::size_t n_members, std::uint64_t seed, unsigned workers) {
    check_members(n_members);
    if (grid.empty()) throw ValidationError("grid", "must not be empty");
    const std::size_t T = grid.size();

    std::vector<double> sq(n_members * T);
    parallel_for(
        n_members,
        [&](std::size_t k) {
            const ThermalMember member = sample_member(basis, Q, seed, k);
            const double x0 = position_expectation(member, basis, 0.0);
            for (std::size_t i = 0; i < T; ++i) {
                const double d = grid[i] == 0.0 ? 0.0 : position_expectation(member, basis, grid[i]) - x0;
                sq[k * T + i] = d * d;
            }
        },
        workers);

    EnsembleResult r;
    r.times = grid.times();
    r.n_members = n_members;
    r.seed = seed;
    std::vector<double> column(n_members);
    for (std::size_t i = 0; i < T; ++i) {
        for (std::size_t k = 0; k < n_members; ++k) column[k] = sq[k * T + i];
        const Moments mom = moments(column);
        r.mean_msd.push_back(mom.mean);
        r.std_error.push_back(mom.std_error);
    }
    return r;
}

RerandomizedEstimate sample_msd_rerandomized(const EigenBasis& basis, double Q,
                                             std::size_t n_members, std::uint64_t seed, double t,
                                             unsigned workers) {
    check_members(n_members);
    std::vector<double> sq(n_members);
    parallel_for(
        n_members,
        [&](std::size_t k) {
            const ThermalMember before = sample_member(basis, Q, seed, k, 1);
            const ThermalMember after = sample_member(basis, Q, seed, k, 2);
            const double d = position_expectation(after, basis, t) -
                             position_expectation(before, basis, 0.0);
            sq[k] = d * d;
        },
        workers);

    const Moments mom = moments(sq);
    return {mom.mean, mom.std_error, t, n_members, seed};
}

}  // namespace qmsd
