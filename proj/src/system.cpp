#include "qmsd/system.hpp"

#include <cmath>
#include <numbers>

#include "qmsd/errors.hpp"
#include "qmsd/units.hpp"

namespace qmsd {

namespace {

void require_positive(double value, const char* field) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw ValidationError(field, "must be positive and finite");
    }
}

}  // namespace

void PhysicalSystem::validate() const {
    require_positive(mass, "mass");
    require_positive(temperature, "temperature");
    require_positive(lattice_a, "lattice_a");
    if (n_cells < 1) throw ValidationError("n_cells", "must be at least 1");
    if (dimensionality < 1 || dimensionality > 3) {
        throw ValidationError("dimensionality", "must be 1, 2 or 3");
    }
}

PhysicalSystem PhysicalSystem::from_user_units(double mass_u, double temperature_K,
                                               double lattice_pm, int n_cells,
                                               int dimensionality) {
    PhysicalSystem sys{units::u_to_kg(mass_u), temperature_K, units::pm_to_m(lattice_pm),
                       n_cells, dimensionality};
    sys.validate();
    return sys;
}

CharacteristicScales derive_scales(const PhysicalSystem& sys) {
    sys.validate();
    constexpr double hbar = PhysicalConstants::hbar;
    constexpr double two_pi = 2.0 * std::numbers::pi;
    const double m = sys.mass;
    const double L = sys.length();

    CharacteristicScales s;
    s.beta = 1.0 / (PhysicalConstants::k_B * sys.temperature);
    s.t_b = hbar * s.beta;
    s.t_c = L * std::sqrt(m * s.beta);
    s.v_T = 1.0 / std::sqrt(s.beta * m);
    s.lambda_T = std::sqrt(hbar * hbar * s.beta / (two_pi * m));
    s.D_q = hbar / (2.0 * m);
    s.Q_approx = L * std::sqrt(m / (two_pi * s.beta * hbar * hbar));
    return s;
}

}  // namespace qmsd
