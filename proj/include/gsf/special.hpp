#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace gsf {

using Complex = std::complex<double>;

/// Which family of spherical functions an object belongs to: the
/// trigonometric (Heckman-Opdam) setting works with sinh of root values,
/// the rational (Dunkl) setting with plain differences.
enum class Setting { trigonometric, rational };

inline const char* to_string(Setting s) {
  return s == Setting::trigonometric ? "trig" : "dunkl";
}

/// log sinh(d) for d > 0, accurate for both tiny and large d.
inline double log_sinh(double d) {
  if (d < 1e-4) {
    // sinh(d)/d = 1 + d^2/6 + d^4/120
    const double d2 = d * d;
    return std::log(d) + std::log1p(d2 / 6.0 + d2 * d2 / 120.0);
  }
  if (d > 20.0) return d - std::numbers::ln2 + std::log1p(-std::exp(-2.0 * d));
  return std::log(std::sinh(d));
}

/// log(sinh(d)/d), smooth through d = 0.
inline double log_sinhc(double d) {
  const double a = std::abs(d);
  if (a < 1e-4) {
    const double d2 = d * d;
    return std::log1p(d2 / 6.0 + d2 * d2 / 120.0);
  }
  return log_sinh(a) - std::log(a);
}

/// Log of the root factor f(d): sinh(d) (trigonometric) or d (rational).
inline double log_root_factor(Setting s, double d) {
  return s == Setting::trigonometric ? log_sinh(d) : std::log(d);
}

/// Log of f(d)/d; identically zero in the rational setting.
inline double log_root_factor_ratio(Setting s, double d) {
  return s == Setting::trigonometric ? log_sinhc(d) : 0.0;
}

inline double log_gamma(double x) { return std::lgamma(x); }

/// Principal-branch log Gamma for Re z > 0 (Lanczos, g = 7, n = 9).
inline Complex log_gamma(Complex z) {
  if (z.imag() == 0.0 && z.real() > 0.0) return {std::lgamma(z.real()), 0.0};
  if (z.real() < 0.5) {
    // reflection keeps the series in its accurate half-plane
    const Complex pi{std::numbers::pi, 0.0};
    return std::log(pi / std::sin(pi * z)) - log_gamma(1.0 - z);
  }
  static constexpr double coeff[9] = {
      0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
      771.32342877765313,      -176.61502916214059,   12.507343278686905,
      -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
  z -= 1.0;
  Complex acc = coeff[0];
  for (int i = 1; i < 9; ++i) acc += coeff[i] / (z + static_cast<double>(i));
  const Complex t = z + 7.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t +
         std::log(acc);
}

inline void require_positive_multiplicity(double m) {
  if (!(m > 0.0) || !std::isfinite(m))
    throw std::invalid_argument("multiplicity m must be a finite positive real");
}

inline void require_positive_multiplicity(Complex m) {
  if (!(m.real() > 0.0) || !std::isfinite(m.real()) || !std::isfinite(m.imag()))
    throw std::invalid_argument("multiplicity m must have positive real part");
}

}  // namespace gsf
