#pragma once

// The dimensionless cavity integrand functions g+(s), g-(s), their
// regularized/subtracted forms, and the generalized sinc weight.
//
// g+-(s) = (1/s^3 +- cosh s/sinh^3 s)^2 + sinh^2 s/cosh^6 s
//          +- 2 s (sinh s/cosh^3 s) (s^2 - 3 pi^2/4)/(s^2 + pi^2/4)^3
//
// Three evaluation zones keep every form accurate to full double precision:
//   s < 0.1   Taylor series (the naive difference 1/s^3 - cosh s/sinh^3 s
//             loses ~15 digits by s = 0.05)
//   s < 2     direct hyperbolic formulas
//   s >= 2    exponential forms in u = exp(-2s) (no overflow, no
//             cancellation against the explicit 1/s^6 tail)
//
// Series coefficients come from symbolic expansion; the generation script is
// docs/generate_series_coefficients.py.

#include <cmath>
#include <complex>
#include <stdexcept>

namespace vacmech {

enum class GKind { Plus, Minus };

struct pole_error : std::domain_error {
  using std::domain_error::domain_error;
};

namespace detail {

inline constexpr double kSeriesGuard = 0.1;
inline constexpr double kExpZone = 2.0;

// Taylor coefficients of ghat_reg(s) := g+(s) - 4/s^6 + (4/15)/s^2 in s^(2k).
inline constexpr double kPlusReg[9] = {
    0.08465608465608466,    0.001132370216970489,  -0.02095771865851390,
    0.01970350909414994,    -0.01404260715790051,  0.008845530998712869,
    -0.005160151803418770,  0.002851019842982839,  -0.001512353724057041};

// Taylor coefficients of g-(s) in s^(2k).
inline constexpr double kMinus[9] = {
    0.0,                    1.989978740894141,     -5.314940950573489,
    8.070790227621809,      -9.180121253672627,    8.709024045431627,
    -7.284593842423692,     5.552517538164397,     -3.940075903103507};

inline double even_poly(const double (&c)[9], double s) {
  const double x = s * s;
  double acc = c[8];
  for (int k = 7; k >= 0; --k) acc = acc * x + c[k];
  return acc;
}

// cosh s / sinh^3 s, stable for all s > 0.
inline double cosh_over_sinh3(double s) {
  if (s < kExpZone) {
    const double sh = std::sinh(s);
    return std::cosh(s) / (sh * sh * sh);
  }
  const double u = std::exp(-2.0 * s);
  const double om = 1.0 - u;
  return 4.0 * u * (1.0 + u) / (om * om * om);
}

// sinh s / cosh^3 s, stable for all s >= 0.
inline double sinh_over_cosh3(double s) {
  if (s < kExpZone) {
    const double ch = std::cosh(s);
    return std::sinh(s) / (ch * ch * ch);
  }
  const double u = std::exp(-2.0 * s);
  const double op = 1.0 + u;
  return 4.0 * u * (1.0 - u) / (op * op * op);
}

// sinh^2 s / cosh^6 s.
inline double sinh2_over_cosh6(double s) {
  if (s < kExpZone) {
    const double sh = std::sinh(s), ch = std::cosh(s);
    return (sh * sh) / std::pow(ch, 6);
  }
  const double u = std::exp(-2.0 * s);
  const double om = 1.0 - u, op = 1.0 + u;
  return 16.0 * u * u * om * om / std::pow(op, 6);
}

// Rational factor (s^2 - 3 pi^2/4)/(s^2 + pi^2/4)^3; real and complex forms.
inline double rational_factor(double s) {
  const double q = 0.25 * M_PI * M_PI;
  const double d = s * s + q;
  return (s * s - 3.0 * q) / (d * d * d);
}
inline std::complex<double> rational_factor(std::complex<double> s) {
  const double q = 0.25 * M_PI * M_PI;
  const std::complex<double> d = s * s + q;
  return (s * s - 3.0 * q) / (d * d * d);
}

// Exponentially decaying part E+-(s) := g+-(s) - 1/s^6, valid formula for
// all s > 0 but evaluated here only in the exponential zone where each term
// is separately small.  Returned as e^(2s) * E (the caller reattaches the
// exponential, which keeps region-IIa weights overflow-free).
inline double exp_part_scaled(double s, GKind kind) {
  const double u = std::exp(-2.0 * s);
  const double om = 1.0 - u, op = 1.0 + u;
  const double x_scaled = 4.0 * (1.0 + u) / (om * om * om);        // e^{2s} X
  const double t_scaled = 4.0 * (1.0 - u) / (op * op * op);        // e^{2s} sinh/cosh^3
  const double x2_scaled = 16.0 * u * op * op / std::pow(om, 6);   // e^{2s} X^2
  const double y_scaled = 16.0 * u * om * om / std::pow(op, 6);    // e^{2s} Y
  const double cross = 2.0 * x_scaled / (s * s * s);               // e^{2s} 2X/s^3
  const double zrat = 2.0 * s * t_scaled * rational_factor(s);     // e^{2s} Z
  return kind == GKind::Plus ? cross + x2_scaled + y_scaled + zrat
                             : -cross + x2_scaled + y_scaled - zrat;
}

inline double exp_part(double s, GKind kind) {
  return std::exp(-2.0 * s) * exp_part_scaled(s, kind);
}

// Gaussian neutralizer for the (4/15)/s^2 short-distance piece of g+.
// phi(0) = 1 and int_0^inf phi ds = 0, so subtracting (4/15) phi/s^2 from
// the remainder integrand changes neither the omega^2 curvature (the B
// moment) nor, beyond exponentially small terms, the large-QH limit.
inline double phi_neutralizer(double s) {
  return (1.0 - 2.0 * s * s) * std::exp(-s * s);
}

// g+(s) - 4/s^6 + (4/15)/s^2: regular even function, tail -3/s^6 + 4/(15 s^2).
inline double ghat_plus_reg(double s) {
  if (s < kSeriesGuard) return even_poly(kPlusReg, s);
  if (s < kExpZone) {
    const double x = cosh_over_sinh3(s);
    const double inv3 = 1.0 / (s * s * s);
    const double sum = inv3 + x;
    return sum * sum - 4.0 * inv3 * inv3 + (4.0 / 15.0) / (s * s) +
           sinh2_over_cosh6(s) + 2.0 * s * sinh_over_cosh3(s) * rational_factor(s);
  }
  const double s6 = std::pow(s, 6);
  return exp_part(s, GKind::Plus) - 3.0 / s6 + (4.0 / 15.0) / (s * s);
}

// Complex g+-(s) for contour work near the imaginary axis (|Re s| small,
// |Im s| moderate): direct hyperbolic formulas suffice there.
inline std::complex<double> g_complex(std::complex<double> s, GKind kind) {
  const std::complex<double> sh = std::sinh(s), ch = std::cosh(s);
  const std::complex<double> x = ch / (sh * sh * sh);
  const std::complex<double> inv3 = 1.0 / (s * s * s);
  const std::complex<double> first =
      kind == GKind::Plus ? (inv3 + x) * (inv3 + x) : (inv3 - x) * (inv3 - x);
  const std::complex<double> y = sh * sh / std::pow(ch, 6);
  const std::complex<double> z = 2.0 * s * (sh / (ch * ch * ch)) * rational_factor(s);
  return kind == GKind::Plus ? first + y + z : first + y - z;
}

}  // namespace detail

// g+-(s).  Even in s.  Plus diverges as 4/s^6 at s = 0 (pole error there);
// Minus vanishes as O(s^2).
inline double g(double s, GKind kind) {
  s = std::abs(s);
  if (kind == GKind::Plus) {
    if (s == 0.0) throw pole_error("g+: pole of order 6 at s = 0");
    if (s < detail::kSeriesGuard) {
      const double s2 = s * s;
      return 4.0 / (s2 * s2 * s2) - (4.0 / 15.0) / s2 + detail::even_poly(detail::kPlusReg, s);
    }
    if (s < detail::kExpZone) {
      const double x = detail::cosh_over_sinh3(s);
      const double inv3 = 1.0 / (s * s * s);
      return (inv3 + x) * (inv3 + x) + detail::sinh2_over_cosh6(s) +
             2.0 * s * detail::sinh_over_cosh3(s) * detail::rational_factor(s);
    }
    return detail::exp_part(s, GKind::Plus) + 1.0 / std::pow(s, 6);
  }
  if (s == 0.0) return 0.0;
  if (s < detail::kSeriesGuard) return detail::even_poly(detail::kMinus, s);
  if (s < detail::kExpZone) {
    const double x = detail::cosh_over_sinh3(s);
    const double inv3 = 1.0 / (s * s * s);
    return (inv3 - x) * (inv3 - x) + detail::sinh2_over_cosh6(s) -
           2.0 * s * detail::sinh_over_cosh3(s) * detail::rational_factor(s);
  }
  return detail::exp_part(s, GKind::Minus) + 1.0 / std::pow(s, 6);
}

// g+(s) - 4/s^6, the renormalized integrand of the B constant.  Behaves as
// -4/(15 s^2) + O(1) near 0 and as -3/s^6 + O(e^-2s poly) at infinity.
inline double g_plus_subtracted(double s) {
  if (s <= 0.0) throw pole_error("g_plus_subtracted: s must be positive");
  return detail::ghat_plus_reg(s) - (4.0 / 15.0) / (s * s);
}

// sin(x)/x for Q2 > 0 with x = 2 sqrt(Q2) H s / pi, continued to
// sinh(x')/x' for Q2 < 0; equals 1 on the light cone and at s = 0.
inline double sinc_weight(double Q2, double H, double s) {
  if (H <= 0.0) throw std::domain_error("sinc_weight: H must be positive");
  const double z = (2.0 * H * s / M_PI) * (2.0 * H * s / M_PI) * Q2;  // x^2, signed
  if (std::abs(z) < 1e-6) return 1.0 - z / 6.0 + z * z / 120.0;
  if (z > 0.0) {
    const double x = std::sqrt(z);
    return std::sin(x) / x;
  }
  const double x = std::sqrt(-z);
  return std::sinh(x) / x;
}

}  // namespace vacmech
