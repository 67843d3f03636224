#include "qmsd/exact_msd.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "qmsd/errors.hpp"
#include "qmsd/parallel.hpp"
#include "qmsd/units.hpp"

namespace qmsd {

namespace {

// |x_nj|^2 = (L / (2 pi d))^2 with d = |n - j|, tabulated for d = 1..K-1.
std::vector<double> gap_table(const EigenBasis& basis) {
    std::vector<double> table(basis.size(), 0.0);
    const double scale = basis.length() / (2.0 * std::numbers::pi);
    for (std::size_t d = 1; d < table.size(); ++d) {
        const double r = scale / static_cast<double>(d);
        table[d] = r * r;
    }
    return table;
}

void check_inputs(const EigenBasis& basis, double Q, const ReductionConfig& cfg) {
    if (basis.size() == 0) throw ValidationError("basis", "must not be empty");
    if (!(Q > 0.0)) throw ValidationError("Q", "partition function must be positive");
    if (cfg.block_rows == 0) throw ValidationError("block_rows", "must be positive");
}

// Sum over rows n of w_n * sum_{j > n} w_j * g[j - n] * pair(n, j), reduced
// per the ReductionConfig contract. `serial` disables the block-level
// parallelism so callers can parallelise over an outer dimension instead.
template <class Pair>
double triangle_sum(const EigenBasis& basis, const std::vector<double>& gap,
                    const ReductionConfig& cfg, bool serial, const Pair& pair) {
    const auto& w = basis.weights();
    const std::size_t K = basis.size();
    const std::size_t blocks = (K + cfg.block_rows - 1) / cfg.block_rows;

    auto row = [&](std::size_t n) -> double {
        if (w[n] == 0.0) return 0.0;
        const double inner = pairwise_sum(n + 1, K, [&](std::size_t j) {
            return w[j] * gap[j - n] * pair(n, j);
        });
        return w[n] * inner;
    };

    std::vector<double> partial(blocks, 0.0);
    auto block = [&](std::size_t b) {
        const std::size_t lo = b * cfg.block_rows;
        const std::size_t hi = std::min(K, lo + cfg.block_rows);
        partial[b] = pairwise_sum(lo, hi, row);
    };
    if (serial) {
        for (std::size_t b = 0; b < blocks; ++b) block(b);
    } else {
        parallel_for(blocks, block, cfg.workers);
    }
    return pairwise_sum(0, blocks, [&](std::size_t b) { return partial[b]; });
}

double msd_at(const EigenBasis& basis, double Q, const std::vector<double>& gap, double t,
              const ReductionConfig& cfg, bool serial) {
    if (!(t >= 0.0) || !std::isfinite(t)) throw ValidationError("t", "must be non-negative");
    if (t == 0.0) return 0.0;

    // z_n = exp(i E_n t / hbar); |z_n - z_j|^2 = 4 sin^2((E_n - E_j) t / 2 hbar).
    const auto& E = basis.energies();
    const std::size_t K = basis.size();
    std::vector<double> re(K), im(K);
    const double rate = t / PhysicalConstants::hbar;
    for (std::size_t i = 0; i < K; ++i) {
        const double phase = E[i] * rate;
        re[i] = std::cos(phase);
        im[i] = std::sin(phase);
    }
    const double sum = triangle_sum(basis, gap, cfg, serial, [&](std::size_t n, std::size_t j) {
        const double dx = re[n] - re[j];
        const double dy = im[n] - im[j];
        return dx * dx + dy * dy;
    });
    // (4/Q^2) * 2 * sum_{n<j} W sin^2 = (2/Q^2) * sum_{n<j} W |z_n - z_j|^2
    return 2.0 * sum / (Q * Q);
}

}  // namespace

double msd_exact(const EigenBasis& basis, double Q, double t, const ReductionConfig& cfg) {
    check_inputs(basis, Q, cfg);
    return msd_at(basis, Q, gap_table(basis), t, cfg, false);
}

MsdCurve msd_exact_curve(const EigenBasis& basis, double Q, const TimeGrid& grid,
                         const ReductionConfig& cfg) {
    check_inputs(basis, Q, cfg);
    if (grid.empty()) throw ValidationError("grid", "must not be empty");
    const auto gap = gap_table(basis);

    MsdCurve curve;
    curve.method = Method::ExactSum;
    curve.times = grid.times();
    curve.values.assign(grid.size(), 0.0);
    parallel_for(
        grid.size(),
        [&](std::size_t i) { curve.values[i] = msd_at(basis, Q, gap, grid[i], cfg, true); },
        cfg.workers);

    curve.params["basis_size"] = std::to_string(basis.size());
    curve.params["block_rows"] = std::to_string(cfg.block_rows);
    return curve;
}

double breve_sum(const EigenBasis& basis, double Q, const ReductionConfig& cfg) {
    check_inputs(basis, Q, cfg);
    const auto gap = gap_table(basis);
    const double sum =
        triangle_sum(basis, gap, cfg, false, [](std::size_t, std::size_t) { return 1.0; });
    // (2/Q^2) * 2 * sum_{n<j} W
    return 4.0 * sum / (Q * Q);
}

}  // namespace qmsd
