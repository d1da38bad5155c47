#pragma once

#include <cmath>

#include "voigt/core.hpp"

namespace voigt {

enum class ProfileKind { Gaussian, Lorentzian, Voigt };

/// G(x) = exp(-(x/omega_g)^2) / (sqrt(pi) omega_g)
inline double gaussian(double x, const LineParams& p) {
  const double u = x / p.omega_g();
  return std::exp(-u * u) * inv_sqrt_pi / p.omega_g();
}

/// L(x) = omega_l / (pi (x^2 + omega_l^2)). The omega_l = 0 limit is a delta
/// distribution and is rejected.
inline double lorentzian(double x, const LineParams& p) {
  const double wl = p.omega_l();
  if (wl == 0.0) throw DegenerateWidthError("lorentzian: omega_l = 0 is a delta distribution");
  return wl / (pi * (x * x + wl * wl));
}

/// Fourier transform of the Voigt profile: the product of the Gaussian and
/// Lorentzian transforms, exp(-omega_g^2 kappa^2 / 4 - omega_l |kappa|).
inline double voigt_fourier(double kappa, const LineParams& p) {
  const double wg = p.omega_g();
  return std::exp(-0.25 * wg * wg * kappa * kappa - p.omega_l() * std::abs(kappa));
}

}  // namespace voigt
