#include "qmsd/scattering.hpp"

#include <cmath>
#include <numbers>

#include "qmsd/errors.hpp"
#include "qmsd/ideal.hpp"
#include "qmsd/units.hpp"

namespace qmsd {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

void ScatteringParams::validate() const {
    if (!(v_T > 0.0)) throw ValidationError("v_T", "must be positive");
    if (!(D_q > 0.0)) throw ValidationError("D_q", "must be positive");
    if (!std::isfinite(q)) throw ValidationError("q", "must be finite");
}

std::complex<double> pair_correlation_self(const ScatteringParams& p, double x, double t) {
    p.validate();
    if (!(t > 0.0)) throw ValidationError("t", "G_s is a Dirac delta at t = 0; need t > 0");
    const std::complex<double> d2 = complex_squared_length(p.v_T, p.D_q, t);
    return std::exp(-x * x / (2.0 * d2)) / std::sqrt(kTwoPi * d2);
}

double dsf(const ScatteringParams& p, double omega) {
    p.validate();
    if (p.q == 0.0) throw ValidationError("q", "must be non-zero");
    const double var = p.v_T * p.v_T * p.q * p.q;
    const double shift = omega - p.D_q * p.q * p.q;
    return std::exp(-shift * shift / (2.0 * var)) / std::sqrt(kTwoPi * var);
}

std::complex<double> isf(const ScatteringParams& p, double t) {
    p.validate();
    const std::complex<double> d2 = complex_squared_length(p.v_T, p.D_q, t);
    return std::exp(-d2 * (p.q * p.q / 4.0)) / std::sqrt(kTwoPi);
}

double isf_phase(const ScatteringParams& p, double t) {
    p.validate();
    if (!(t >= 0.0)) throw ValidationError("t", "must be non-negative");
    return p.D_q * t * p.q * p.q / 2.0;
}

double recoil_energy(const ScatteringParams& p) {
    p.validate();
    return PhysicalConstants::hbar * p.D_q * p.q * p.q;
}

}  // namespace qmsd
