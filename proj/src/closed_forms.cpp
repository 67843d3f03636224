#include "qmsd/closed_forms.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "qmsd/errors.hpp"
#include "qmsd/units.hpp"

namespace qmsd {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrtPi = 1.7724538509055160272981674833411;
constexpr double kSqrt2 = std::numbers::sqrt2;

constexpr int kSeriesTerms = 28;

// c_m = (-1)^m [1/(6 m! (2m+1)) - 1/(6 (m+2)!) - 1/(12 (m+1)!)]
constexpr std::array<double, kSeriesTerms> series_coefficients() {
    std::array<double, kSeriesTerms> c{};
    double fact = 1.0;  // m!
    for (int m = 0; m < kSeriesTerms; ++m) {
        if (m > 0) fact *= m;
        const double f1 = fact * (m + 1);
        const double f2 = f1 * (m + 2);
        const double v = 1.0 / (6.0 * fact * (2 * m + 1)) - 1.0 / (6.0 * f2) - 1.0 / (12.0 * f1);
        c[m] = (m % 2 == 0) ? v : -v;
    }
    c[0] = 0.0;
    return c;
}

constexpr auto kJSeries = series_coefficients();

}  // namespace

double erf(double x) { return std::erf(x); }

double J(double y) {
    if (!(y >= 0.0)) throw ValidationError("y", "must be non-negative");
    if (y == 0.0) return kSqrt2 * kPi / 12.0;
    if (std::isinf(y)) return 0.0;

    const double z = 0.5 / y;
    if (y >= 2.0) {
        double s = 0.0;
        for (int m = kSeriesTerms - 1; m >= 1; --m) s = s * z + kJSeries[m];
        return std::sqrt(2.0 * kPi * z) * s * z;
    }
    const double one_minus_e = -std::expm1(-z);
    const double first = kSqrt2 * kPi / 12.0 * std::erf(1.0 / std::sqrt(2.0 * y));
    const double second =
        2.0 * kSqrtPi / 3.0 * std::sqrt(y) * (one_minus_e * y - (2.0 + one_minus_e) / 4.0);
    return first + second;
}

double I_ab(double a, double b) {
    if (!(a >= 0.0)) throw ValidationError("a", "must be non-negative");
    if (!(b > 0.0)) throw ValidationError("b", "must be positive");
    return kSqrtPi * a / (std::sqrt(a + b) + std::sqrt(b));
}

double breve_closed(const PhysicalSystem& sys, const CharacteristicScales& scales) {
    sys.validate();
    constexpr double hbar = PhysicalConstants::hbar;
    const double L = sys.length();
    const double m = sys.mass;
    const double beta = scales.beta;
    return L * hbar * std::sqrt(2.0 * beta / (kPi * m)) * J(hbar * hbar * beta / (2.0 * m * L * L));
}

void CollisionModelParams::validate() const {
    if (!(alpha > 0.0)) throw ValidationError("alpha", "must be positive");
    if (!(L > 0.0)) throw ValidationError("L", "must be positive");
    if (!(v_T > 0.0)) throw ValidationError("v_T", "must be positive");
    if (!(t_b > 0.0)) throw ValidationError("t_b", "must be positive");
}

CollisionModelParams CollisionModelParams::from(double alpha, const PhysicalSystem& sys,
                                                const CharacteristicScales& scales) {
    CollisionModelParams p{alpha, sys.length(), scales.v_T, scales.t_b};
    p.validate();
    return p;
}

double msd_collision_model(const CollisionModelParams& p, double t) {
    if (!(t >= 0.0)) throw ValidationError("t", "must be non-negative");
    if (t == 0.0) return 0.0;
    const double arg = p.alpha * p.L / (kSqrt2 * p.v_T * t);
    const double free_weight = std::erf(arg);
    const double collided_weight = std::erfc(arg);

    const double s = t / p.t_b;
    const double vt = p.v_T * p.t_b;
    // v_T^2 t_b^2 (sqrt(s^2 + 1) - 1) in cancellation-free form
    const double ideal = vt * vt * s * s / (std::sqrt(s * s + 1.0) + 1.0);
    const double r = vt / p.L;
    const double plateau = vt * p.L * std::sqrt(2.0 / kPi) * J(0.5 * r * r);
    return free_weight * ideal + collided_weight * plateau;
}

MsdCurve msd_collision_model_curve(const CollisionModelParams& p, const TimeGrid& grid) {
    p.validate();
    if (grid.empty()) throw ValidationError("grid", "must not be empty");
    MsdCurve curve;
    curve.method = Method::CollisionModel;
    curve.times = grid.times();
    curve.values.reserve(grid.size());
    for (double t : grid.times()) curve.values.push_back(msd_collision_model(p, t));
    return curve;
}

double maxwell_boltzmann_pdf(double v, double v_T) {
    if (!(v >= 0.0)) throw ValidationError("v", "must be non-negative");
    if (!(v_T > 0.0)) throw ValidationError("v_T", "must be positive");
    const double u = v / v_T;
    return std::sqrt(2.0 / kPi) * std::exp(-0.5 * u * u) / v_T;
}

}  // namespace qmsd
