#pragma once

#include "qmsd/system.hpp"
#include "qmsd/time_grid.hpp"

namespace qmsd {

/// Conventional error function, erf(0) = 0, erf(inf) = 1.
double erf(double x);

/// J(y) = (sqrt(2) pi/12) erf(1/sqrt(2y))
///        + (2 sqrt(pi)/3) sqrt(y) ((1 - e^{-1/(2y)}) y - (3 - e^{-1/(2y)})/4),
/// the closed form of 2 int_0^inf e^{-y x^2} (sin(x/r2)/x^2 - cos(x/r2)/(r2 x))^2 dx
/// with r2 = sqrt(2). J(0) = sqrt(2) pi / 12 and J decreases to 0.
///
/// The two terms cancel to O(y^{-3/2}) for large y, so for y >= 2 the value
/// is summed from its series in z = 1/(2y) instead:
///   J = sqrt(2 pi z) sum_{m>=1} c_m z^m,  c_1 = 1/72.
double J(double y);

/// I(a, b) = int_0^inf e^{-b x^2} (1 - e^{-a x^2}) / x^2 dx = sqrt(pi) (sqrt(a+b) - sqrt(b)).
double I_ab(double a, double b);

/// Closed-form decoherence plateau L hbar sqrt(2 beta/(pi m)) J(hbar^2 beta / (2 m L^2)).
double breve_closed(const PhysicalSystem& sys, const CharacteristicScales& scales);

struct CollisionModelParams {
    double alpha = 0.35;
    double L = 0.0;    // m
    double v_T = 0.0;  // m/s
    double t_b = 0.0;  // s

    void validate() const;
    static CollisionModelParams from(double alpha, const PhysicalSystem& sys,
                                     const CharacteristicScales& scales);
};

/// Velocity-averaged MSD of the hypothetical-collision model: a particle of
/// speed v follows the ideal MSD until alpha L / v, then jumps to the plateau.
double msd_collision_model(const CollisionModelParams& p, double t);

MsdCurve msd_collision_model_curve(const CollisionModelParams& p, const TimeGrid& grid);

/// One-dimensional Maxwell-Boltzmann speed density on v >= 0.
double maxwell_boltzmann_pdf(double v, double v_T);

}  // namespace qmsd
