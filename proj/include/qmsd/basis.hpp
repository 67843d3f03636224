#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "qmsd/system.hpp"

namespace qmsd {

/// Plane-wave eigenbasis of the free particle on a periodic super-cell,
/// truncated to indices n = -M..M (K = 2M + 1 states). Storage slot i holds
/// index n = i - M. Immutable after construction.
class EigenBasis {
public:
    int max_index() const { return max_index_; }
    std::size_t size() const { return q_.size(); }
    int index_at(std::size_t slot) const { return static_cast<int>(slot) - max_index_; }

    double length() const { return length_; }
    double mass() const { return mass_; }
    double beta() const { return beta_; }

    const std::vector<double>& wavenumbers() const { return q_; }
    const std::vector<double>& energies() const { return energy_; }
    const std::vector<double>& weights() const { return weight_; }

    double edge_weight() const { return weight_.back(); }
    double edge_weight_cutoff() const { return cutoff_; }
    /// Non-fatal diagnostics, e.g. an edge weight above the cutoff.
    const std::vector<std::string>& warnings() const { return warnings_; }

private:
    friend EigenBasis build_basis(const PhysicalSystem&, int, double);

    int max_index_ = 0;
    double length_ = 0.0;
    double mass_ = 0.0;
    double beta_ = 0.0;
    double cutoff_ = 0.0;
    std::vector<double> q_;
    std::vector<double> energy_;
    std::vector<double> weight_;
    std::vector<std::string> warnings_;
};

inline constexpr double kDefaultEdgeWeightCutoff = 1e-12;

/// K = funcs_per_cell * n_cells rounded up to odd, centred on n = 0.
EigenBasis build_basis(const PhysicalSystem& sys, int funcs_per_cell,
                       double edge_weight_cutoff = kDefaultEdgeWeightCutoff);

/// <phi_n|x|phi_j> = i (-1)^(n-j+1) / (q_n - q_j) for n != j, 0 on the diagonal.
std::complex<double> x_element(int n, int j, double L);

/// X(q) = L (2 sin(Lq/2)/(L q)^2 - cos(Lq/2)/(L q)); x_nj = i X(q_n - q_j).
/// Uses the odd series L^2 q/12 (1 - (Lq)^2/40 + ...) near q = 0.
double x_element_general(double q, double L);

/// Sum of Boltzmann weights, accumulated from the smallest weights inward.
double partition_function(const EigenBasis& basis);

}  // namespace qmsd
