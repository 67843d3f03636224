#pragma once

#include <complex>

#include "qmsd/system.hpp"
#include "qmsd/time_grid.hpp"

namespace qmsd {

struct IdealMsdParams {
    double mass = 0.0;  // kg
    double t_b = 0.0;   // s
    int dimensionality = 1;

    void validate() const;
    static IdealMsdParams from(const PhysicalSystem& sys, const CharacteristicScales& scales);
};

/// MSD of the thermalized free particle in infinite space:
///   d * (hbar/m) * (sqrt(t^2 + t_b^2) - t_b),
/// evaluated as d * (hbar/m) * t^2 / (sqrt(t^2 + t_b^2) + t_b) so that the
/// ballistic regime t << t_b keeps full precision.
double msd_ideal(const IdealMsdParams& p, double t);

MsdCurve msd_ideal_curve(const IdealMsdParams& p, const TimeGrid& grid);

/// v_T^2 t^2 - 2i D_q t, the complex width of the ideal-gas self correlation.
using ComplexSquaredLength = std::complex<double>;

ComplexSquaredLength complex_squared_length(double v_T, double D_q, double t);

}  // namespace qmsd
