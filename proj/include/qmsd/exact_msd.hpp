#pragma once

#include <cstddef>

#include "qmsd/basis.hpp"
#include "qmsd/time_grid.hpp"

namespace qmsd {

/// Controls the deterministic reduction of the O(K^2) pair sums. Rows of
/// the (n < j) triangle are split into blocks of `block_rows`; each block is
/// reduced pairwise and the block partials are combined pairwise in order.
/// Results depend on `block_rows` but never on `workers`.
struct ReductionConfig {
    std::size_t block_rows = 64;
    unsigned workers = 0;  // 0: hardware concurrency
};

/// Coherent MSD of the thermal wave packet on the periodic super-cell:
///   (4/Q^2) sum_{n != j} w_n w_j |x_nj|^2 sin^2((E_n - E_j) t / 2 hbar).
double msd_exact(const EigenBasis& basis, double Q, double t, const ReductionConfig& cfg = {});

/// Pointwise msd_exact, parallel over time points.
MsdCurve msd_exact_curve(const EigenBasis& basis, double Q, const TimeGrid& grid,
                         const ReductionConfig& cfg = {});

/// Plateau after complete phase re-randomization:
///   (2/Q^2) sum_{n != j} w_n w_j |x_nj|^2.
double breve_sum(const EigenBasis& basis, double Q, const ReductionConfig& cfg = {});

}  // namespace qmsd
