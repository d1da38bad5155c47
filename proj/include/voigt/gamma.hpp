#pragma once

#include <array>
#include <cmath>
#include <limits>

#include "voigt/core.hpp"

namespace voigt {

namespace detail {

// B_{2k} / (2k (2k - 1)) for the Stirling series of ln Gamma.
inline constexpr std::array<double, 10> stirling_coefficients = {
    1.0 / 12.0,           -1.0 / 360.0,      1.0 / 1260.0,        -1.0 / 1680.0,
    1.0 / 1188.0,         -691.0 / 360360.0, 1.0 / 156.0,         -3617.0 / 122400.0,
    43867.0 / 244188.0,   -174611.0 / 125400.0};

inline constexpr double stirling_threshold = 15.0;
inline constexpr double half_log_two_pi = 0.91893853320467274178;

inline complex log_gamma_stirling(complex w) {
  const complex inv = 1.0 / w;
  const complex inv2 = inv * inv;
  complex series = 0.0;
  complex power = inv;
  for (double c : stirling_coefficients) {
    series += c * power;
    power *= inv2;
  }
  return (w - 0.5) * std::log(w) - w + half_log_two_pi + series;
}

}  // namespace detail

/// ln Gamma(z), principal branch: cuts run along the negative real axis
/// between the poles. exp(log_gamma(z)) == gamma(z) everywhere.
inline complex log_gamma(complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw InvalidArgument("log_gamma: non-finite argument");
  if (detail::is_nonpositive_integer(z)) throw PoleError("log_gamma: pole at non-positive integer");
  if (z.imag() == 0.0 && z.real() > 0.0) return std::lgamma(z.real());

  // Upward recurrence: moduli are multiplied (and folded into a log before
  // they overflow), arguments are summed one principal value at a time.
  double log_mod = 0.0, mod = 1.0, arg = 0.0;
  complex w = z;
  while (w.real() < detail::stirling_threshold) {
    mod *= std::abs(w);
    if (mod > 1e250 || mod < 1e-250) {
      log_mod += std::log(mod);
      mod = 1.0;
    }
    arg += std::arg(w);
    w += 1.0;
  }
  log_mod += std::log(mod);
  return detail::log_gamma_stirling(w) - complex(log_mod, arg);
}

inline double log_gamma(double x) { return log_gamma(complex(x, 0.0)).real(); }

inline complex gamma(complex z) {
  const complex lg = log_gamma(z);
  if (lg.real() > std::log(std::numeric_limits<double>::max()))
    throw OverflowError("gamma: |Gamma(z)| exceeds the double range", lg);
  complex g = std::exp(lg);
  if (z.imag() == 0.0) g.imag(0.0);
  return g;
}

inline double gamma(double x) { return gamma(complex(x, 0.0)).real(); }

}  // namespace voigt
