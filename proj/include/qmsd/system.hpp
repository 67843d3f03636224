#pragma once

namespace qmsd {

/// A free particle of given mass at temperature T in a periodic super-cell
/// of n_cells lattice cells. All fields are SI.
struct PhysicalSystem {
    double mass = 0.0;         // kg
    double temperature = 0.0;  // K
    double lattice_a = 0.0;    // m
    int n_cells = 1;
    int dimensionality = 1;

    /// Super-cell length L = n_cells * lattice_a.
    double length() const { return n_cells * lattice_a; }

    /// Throws ValidationError naming the first offending field.
    void validate() const;

    /// Builds a system from user units (u, K, pm) and validates it.
    static PhysicalSystem from_user_units(double mass_u, double temperature_K,
                                          double lattice_pm, int n_cells,
                                          int dimensionality = 1);
};

struct CharacteristicScales {
    double beta = 0.0;      // 1/J
    double t_b = 0.0;       // thermal time hbar*beta, s
    double t_c = 0.0;       // collision time L*sqrt(m*beta), s
    double v_T = 0.0;       // thermal speed, m/s
    double lambda_T = 0.0;  // thermal de Broglie length, m
    double D_q = 0.0;       // hbar/(2m), m^2/s
    double Q_approx = 0.0;  // large-L partition function
};

CharacteristicScales derive_scales(const PhysicalSystem& sys);

}  // namespace qmsd
