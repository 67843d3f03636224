#pragma once

#include <complex>

namespace qmsd {

/// Ideal-gas scattering observables at momentum transfer q.
struct ScatteringParams {
    double v_T = 0.0;  // m/s
    double D_q = 0.0;  // m^2/s
    double q = 0.0;    // 1/m

    void validate() const;
};

/// Self part of the van Hove pair correlation,
///   G_s(x, t) = exp(-x^2 / (2 d2)) / sqrt(2 pi d2),  d2 = v_T^2 t^2 - 2i D_q t.
/// Principal square root; Re sqrt(d2) > 0 for t > 0. Rejects t <= 0.
std::complex<double> pair_correlation_self(const ScatteringParams& p, double x, double t);

/// S(q, w) = exp(-(w - D_q q^2)^2 / (2 v_T^2 q^2)) / sqrt(2 pi v_T^2 q^2). Rejects q = 0.
double dsf(const ScatteringParams& p, double omega);

/// I(q, t) = exp(-d2(t) q^2 / 4) / sqrt(2 pi).
std::complex<double> isf(const ScatteringParams& p, double t);

/// Unwrapped phase D_q t q^2 / 2 of the ISF.
double isf_phase(const ScatteringParams& p, double t);

/// hbar D_q q^2 = hbar^2 q^2 / (2m), the DSF peak shift as an energy (J).
double recoil_energy(const ScatteringParams& p);

}  // namespace qmsd
