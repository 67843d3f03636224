#include "qmsd/ideal.hpp"

#include <cmath>

#include "qmsd/errors.hpp"
#include "qmsd/units.hpp"

namespace qmsd {

void IdealMsdParams::validate() const {
    if (!(mass > 0.0)) throw ValidationError("mass", "must be positive");
    if (!(t_b > 0.0)) throw ValidationError("t_b", "must be positive");
    if (dimensionality < 1 || dimensionality > 3) {
        throw ValidationError("dimensionality", "must be 1, 2 or 3");
    }
}

IdealMsdParams IdealMsdParams::from(const PhysicalSystem& sys, const CharacteristicScales& scales) {
    IdealMsdParams p{sys.mass, scales.t_b, sys.dimensionality};
    p.validate();
    return p;
}

double msd_ideal(const IdealMsdParams& p, double t) {
    if (!(t >= 0.0)) throw ValidationError("t", "must be non-negative");
    const double root = std::hypot(t, p.t_b);
    return p.dimensionality * (PhysicalConstants::hbar / p.mass) * (t * t / (root + p.t_b));
}

MsdCurve msd_ideal_curve(const IdealMsdParams& p, const TimeGrid& grid) {
    p.validate();
    if (grid.empty()) throw ValidationError("grid", "must not be empty");
    MsdCurve curve;
    curve.method = Method::IdealAnalytic;
    curve.times = grid.times();
    curve.values.reserve(grid.size());
    for (double t : grid.times()) curve.values.push_back(msd_ideal(p, t));
    return curve;
}

ComplexSquaredLength complex_squared_length(double v_T, double D_q, double t) {
    if (!(t >= 0.0)) throw ValidationError("t", "must be non-negative");
    return {v_T * v_T * t * t, -2.0 * D_q * t};
}

}  // namespace qmsd
