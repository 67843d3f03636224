#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "qmsd/basis.hpp"
#include "qmsd/time_grid.hpp"

namespace qmsd {

/// Per-member random stream. The engine seed is a SplitMix64 hash of
/// (seed, member, stream), so member sets do not depend on evaluation order.
class MemberRng {
public:
    MemberRng(std::uint64_t seed, std::uint64_t member, std::uint64_t stream = 0);

    /// Uniform on [0, 2 pi) from the top 53 bits of the engine output.
    double phase();

private:
    std::mt19937_64 engine_;
};

/// One random-phase thermal wave packet:
///   c_n = exp(-beta E_n / 2 + i theta_n) / sqrt(Q).
struct ThermalMember {
    std::vector<double> phases;
    std::vector<std::complex<double>> amplitudes;
};

ThermalMember make_member(const EigenBasis& basis, double Q, std::span<const double> phases);

/// Draws a member with phases from MemberRng(seed, member, stream).
ThermalMember sample_member(const EigenBasis& basis, double Q, std::uint64_t seed,
                            std::uint64_t member, std::uint64_t stream = 0);

/// x(t) = sum_{n != j} rho_nj(t) x_jn with rho_nj(t) = c_n c_j^* e^{-i (E_n - E_j) t / hbar}.
/// Negative t is allowed (time-reversal checks). Throws NumericalError if the
/// imaginary residue exceeds 1e-10 of the magnitude.
double position_expectation(const ThermalMember& member, const EigenBasis& basis, double t);

struct EnsembleResult {
    std::vector<double> times;
    std::vector<double> mean_msd;   // m^2
    std::vector<double> std_error;  // m^2
    std::size_t n_members = 0;
    std::uint64_t seed = 0;
};

/// Ensemble mean of (x(t) - x(0))^2 over n_members random-phase members.
EnsembleResult sample_msd(const EigenBasis& basis, double Q, const TimeGrid& grid,
                          std::size_t n_members, std::uint64_t seed, unsigned workers = 0);

struct RerandomizedEstimate {
    double mean = 0.0;       // m^2
    double std_error = 0.0;  // m^2
    double t = 0.0;          // evaluation time, s
    std::size_t n_members = 0;
    std::uint64_t seed = 0;
};

/// Ensemble mean of (x_theta(t) - x_theta~(0))^2 with independent phase sets
/// before and after; estimates the decoherence plateau.
RerandomizedEstimate sample_msd_rerandomized(const EigenBasis& basis, double Q,
                                             std::size_t n_members, std::uint64_t seed, double t,
                                             unsigned workers = 0);

}  // namespace qmsd
