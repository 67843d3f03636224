#pragma once

#include <numbers>

namespace qmsd {

/// Exact SI (2019) constants plus the CODATA 2018 atomic mass unit.
struct PhysicalConstants {
    static constexpr double k_B = 1.380649e-23;     // J/K
    static constexpr double h = 6.62607015e-34;     // J s
    static constexpr double hbar = h / (2.0 * std::numbers::pi);
    static constexpr double amu = 1.66053906660e-27;  // kg
    static constexpr double e = 1.602176634e-19;    // C, for eV conversions
};

namespace units {

inline constexpr double femtosecond = 1e-15;
inline constexpr double picometre = 1e-12;
inline constexpr double angstrom = 1e-10;
inline constexpr double millielectronvolt = 1e-3 * PhysicalConstants::e;

constexpr double fs_to_s(double fs) { return fs * femtosecond; }
constexpr double s_to_fs(double s) { return s / femtosecond; }
constexpr double u_to_kg(double u) { return u * PhysicalConstants::amu; }
constexpr double kg_to_u(double kg) { return kg / PhysicalConstants::amu; }
constexpr double pm_to_m(double pm) { return pm * picometre; }
constexpr double m_to_pm(double m) { return m / picometre; }
constexpr double J_to_meV(double joule) { return joule / millielectronvolt; }
constexpr double inv_angstrom_to_inv_m(double q) { return q / angstrom; }

}  // namespace units
}  // namespace qmsd
