#include "qmsd/basis.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "qmsd/errors.hpp"
#include "qmsd/units.hpp"

namespace qmsd {

EigenBasis build_basis(const PhysicalSystem& sys, int funcs_per_cell, double edge_weight_cutoff) {
    sys.validate();
    if (funcs_per_cell < 1) throw ValidationError("funcs_per_cell", "must be at least 1");
    if (!(edge_weight_cutoff > 0.0)) {
        throw ValidationError("edge_weight_cutoff", "must be positive");
    }

    const long requested = static_cast<long>(funcs_per_cell) * sys.n_cells;
    const long K = requested % 2 == 0 ? requested + 1 : requested;

    EigenBasis b;
    b.max_index_ = static_cast<int>(K / 2);
    b.length_ = sys.length();
    b.mass_ = sys.mass;
    b.beta_ = 1.0 / (PhysicalConstants::k_B * sys.temperature);
    b.cutoff_ = edge_weight_cutoff;

    constexpr double hbar = PhysicalConstants::hbar;
    const double dq = 2.0 * std::numbers::pi / b.length_;
    // E_n = e1 * n^2 keeps E_{-n} == E_n bit for bit.
    const double e1 = hbar * hbar * dq * dq / (2.0 * b.mass_);

    b.q_.resize(static_cast<std::size_t>(K));
    b.energy_.resize(b.q_.size());
    b.weight_.resize(b.q_.size());
    for (std::size_t i = 0; i < b.q_.size(); ++i) {
        const double n = b.index_at(i);
        b.q_[i] = dq * n;
        b.energy_[i] = e1 * (n * n);
        b.weight_[i] = std::exp(-b.beta_ * b.energy_[i]);
    }

    if (b.edge_weight() >= edge_weight_cutoff) {
        std::ostringstream os;
        os << "edge Boltzmann weight " << b.edge_weight() << " at |n| = " << b.max_index_
           << " is not below the cutoff " << edge_weight_cutoff
           << "; increase funcs_per_cell for converged long-time results";
        b.warnings_.push_back(os.str());
    }
    return b;
}

std::complex<double> x_element(int n, int j, double L) {
    if (n == j) return {0.0, 0.0};
    const int d = n - j;
    const double gap = 2.0 * std::numbers::pi * d / L;
    const double sign = (d % 2 == 0) ? -1.0 : 1.0;  // (-1)^(d+1)
    return {0.0, sign / gap};
}

double x_element_general(double q, double L) {
    const double u = 0.5 * L * q;
    if (std::abs(u) < 1e-3) {
        const double u2 = u * u;
        return L * u * (1.0 / 6.0 - u2 * (1.0 / 60.0 - u2 / 1680.0));
    }
    return L * (std::sin(u) - u * std::cos(u)) / (2.0 * u * u);
}

double partition_function(const EigenBasis& basis) {
    const auto& w = basis.weights();
    const std::size_t M = static_cast<std::size_t>(basis.max_index());
    double Q = 0.0;
    for (std::size_t k = M; k >= 1; --k) Q += w[M - k] + w[M + k];
    return Q + w[M];
}

}  // namespace qmsd
