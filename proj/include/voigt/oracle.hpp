#pragma once

// Brute-force quadrature references for V(x). Every routine here integrates
// a defining integral directly and shares nothing with the special-function
// evaluators in cerf.hpp, mellin_barnes.hpp or foxh_meijer.hpp.

#include <algorithm>
#include <cmath>
#include <vector>

#include "voigt/core.hpp"
#include "voigt/profiles.hpp"
#include "voigt/quadrature.hpp"

namespace voigt {

struct QuadratureConfig {
  double abs_tol = 1e-18;
  double rel_tol = 1e-13;
  int max_subdivisions = 4000;
  /// Truncation radius of infinite x-domains, in multiples of max(omega_g, omega_l).
  double truncation_radius_factor = 12.0;

  void validate() const {
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
      throw InvalidArgument("quadrature tolerances must be > 0");
    if (max_subdivisions < 10) throw InvalidArgument("max_subdivisions must be >= 10");
    if (!(truncation_radius_factor >= 10.0))
      throw InvalidArgument("truncation_radius_factor must be >= 10");
  }
};

namespace detail {

inline void sort_unique(std::vector<double>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// exp(y^2) erfc(y) for real y >= 0. Uses the C library erfc where it is
// accurate and the Laplace continued fraction in the far tail.
inline double oracle_erfcx(double y) {
  if (y < 12.0) return std::exp(y * y) * std::erfc(y);
  double f = y;
  for (int k = 60; k >= 1; --k) f = y + 0.5 * k / f;
  return inv_sqrt_pi / f;
}

}  // namespace detail

/// V(x) as the convolution integral of L(x - xi) G(xi) over a truncated
/// xi-domain. Requires omega_l > 0.
inline EvalOutcome<double> voigt_convolution(double x, const LineParams& p,
                                             const QuadratureConfig& cfg = {}) {
  cfg.validate();
  const double wg = p.omega_g();
  const double wl = p.omega_l();
  if (wl == 0.0)
    throw DegenerateWidthError("voigt_convolution: omega_l = 0, use voigt_reiche instead");

  const double radius = cfg.truncation_radius_factor * std::max(wg, wl);
  auto integrand = [&](double xi) {
    const double d = x - xi;
    const double u = xi / wg;
    return (wl / pi) / (d * d + wl * wl) * std::exp(-u * u) * inv_sqrt_pi / wg;
  };

  std::vector<double> breaks = {-radius, radius, 0.0, -wg, wg};
  for (double k : {0.0, 1.0, 10.0, 100.0}) {
    breaks.push_back(x - k * wl);
    breaks.push_back(x + k * wl);
  }
  for (double& b : breaks) b = std::clamp(b, -radius, radius);
  detail::sort_unique(breaks);

  const auto q = detail::adaptive_gauss_kronrod(integrand, breaks, cfg.abs_tol, cfg.rel_tol,
                                                cfg.max_subdivisions);
  // Outside |xi| <= radius the Lorentzian factor is at most 1 / (pi omega_l).
  const double tail = std::erfc(radius / wg) / (pi * wl);
  return {q.value, q.error + tail, q.evaluations, Method::Convolution};
}

/// V(x) = (1/pi) int_0^inf exp(-omega_l k - omega_g^2 k^2 / 4) cos(k x) dk,
/// integrated panel by panel between the zeros of cos(k x).
inline EvalOutcome<double> voigt_reiche(double x, const LineParams& p,
                                        const QuadratureConfig& cfg = {}) {
  cfg.validate();
  const double wg = p.omega_g();
  const double wl = p.omega_l();
  const double log_cut = 18.0 * std::log(10.0);

  // Cut where either decay factor falls below 1e-18.
  double k_max = 2.0 * std::sqrt(log_cut) / wg;
  if (wl > 0.0) k_max = std::min(k_max, log_cut / wl);

  const double ax = std::abs(x);
  std::vector<double> breaks = {0.0, k_max};
  if (ax > 0.0) {
    const double zeros = k_max * ax / pi;
    if (zeros > 50.0 * cfg.max_subdivisions)
      throw ConvergenceError("voigt_reiche: too many oscillations before the cut-off");
    for (double k = 0.5; k * pi / ax < k_max; k += 1.0) breaks.push_back(k * pi / ax);
  }
  for (int i = 1; i < 8; ++i) breaks.push_back(k_max * i / 8.0);
  detail::sort_unique(breaks);

  auto integrand = [&](double k) {
    return std::exp(-wl * k - 0.25 * wg * wg * k * k) * std::cos(k * ax);
  };
  const auto q = detail::adaptive_gauss_kronrod(integrand, breaks, cfg.abs_tol, cfg.rel_tol,
                                                cfg.max_subdivisions);
  const double tail =
      std::exp(-wl * k_max - 0.25 * wg * wg * k_max * k_max) / (wl + 0.5 * wg * wg * k_max);
  return {q.value / pi, (q.error + tail) / pi, q.evaluations, Method::Reiche};
}

/// Dimensionless x beyond which exp(x^2) leaves the double range in the
/// intermediate steps of voigt_zaghloul.
inline constexpr double zaghloul_max_x = 26.0;

/// V(x) from K(x, y) = erfc(y) exp(y^2 - x^2) cos(2xy)
///                    + (2/sqrt(pi)) int_0^x exp(xi^2 - x^2) sin(2y(x - xi)) dxi
/// in dimensionless variables x' = x / omega_g, y = omega_l / omega_g.
inline EvalOutcome<double> voigt_zaghloul(double x, const LineParams& p,
                                          const QuadratureConfig& cfg = {}) {
  cfg.validate();
  const double xd = std::abs(x) / p.omega_g();
  const double y = p.ratio();
  if (xd > zaghloul_max_x)
    throw OverflowGuardError("voigt_zaghloul: x / omega_g > 26, exp(x^2) would overflow");

  const double first = detail::oracle_erfcx(y) * std::exp(-xd * xd) * std::cos(2.0 * xd * y);

  double integral = 0.0;
  double err = 0.0;
  long work = 1;
  if (xd > 0.0) {
    auto integrand = [&](double xi) {
      return std::exp((xi - xd) * (xi + xd)) * std::sin(2.0 * y * (xd - xi));
    };
    std::vector<double> breaks = {0.0, xd};
    for (double k : {1.0, 4.0, 16.0}) {
      const double b = xd - k / (2.0 * xd);
      if (b > 0.0) breaks.push_back(b);
    }
    detail::sort_unique(breaks);
    const auto q = detail::adaptive_gauss_kronrod(integrand, breaks, cfg.abs_tol, cfg.rel_tol,
                                                  cfg.max_subdivisions);
    integral = q.value;
    err = q.error;
    work += q.evaluations;
  }
  const double k_value = first + 2.0 * inv_sqrt_pi * integral;
  const double scale = inv_sqrt_pi / p.omega_g();
  const double rounding = 4.0 * machine_eps * (std::abs(first) + std::abs(k_value));
  return {k_value * scale, (2.0 * inv_sqrt_pi * err + rounding) * scale, work, Method::Zaghloul};
}

}  // namespace voigt
