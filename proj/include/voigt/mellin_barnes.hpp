#pragma once

// Mellin-Barnes representations of the Voigt profile.
//
// With Z = 2 (omega_l + i x) / omega_g = rho exp(i theta),
//
//   V(x) = 1/(pi omega_g) (1/2 pi i) int Gamma(s) Gamma(1/2 - s/2) cos(s theta) rho^(-s) ds
//                                                  (descending kernel, 0 < Re s < 1)
//        = 1/(pi omega_g) (1/2 pi i) int Gamma(-s) Gamma(1/2 + s/2) cos(s theta) rho^s ds
//                                                  (ascending kernel, -1 < Re s < 0)
//
// and the cosine is the sum of the conjugate pair Z^(-s), conj(Z)^(-s).
// Closing the descending-kernel contour to the left over the poles of
// Gamma(s) gives the convergent ascending series in rho; closing it to the
// right over the poles of Gamma(1/2 - s/2) at s = 1 + 2m gives the asymptotic
// series in 1/rho.
//
// Residue of Gamma(1/2 - s/2) at s = 1 + 2m: with u = 1/2 - s/2 the pole sits
// at u = -m, where Gamma(u) ~ (-1)^m / (m! (u + m)) and u + m = -(s - 1 - 2m)/2,
// so the residue is -2 (-1)^m / m!. Closing to the right contributes minus the
// residues, giving
//
//   V(x) ~ 1/(pi omega_g) sum_m 2 (-1)^m (2m)! / m! cos((2m + 1) theta) rho^(-(2m + 1)).
//
// The m = 0 term is 2 cos(theta) / (pi omega_g rho) = omega_l / (pi (omega_l^2 + x^2)),
// the Lorentzian.

#include <cmath>
#include <complex>
#include <cstdint>

#include "voigt/contour.hpp"
#include "voigt/core.hpp"
#include "voigt/gamma.hpp"

namespace voigt {

enum class MBForm {
  /// Gamma(s) Gamma(1/2 - s/2) rho^(-s); contour band 0 < c < 1.
  DescendingKernel,
  /// Gamma(-s) Gamma(1/2 + s/2) rho^s; contour band -1 < c < 0.
  AscendingKernel,
};

inline ContourBand contour_band(MBForm form) {
  return form == MBForm::DescendingKernel ? ContourBand{0.0, 1.0} : ContourBand{-1.0, 0.0};
}

/// Contour centred in the legal band of the form: c = 1/2 or c = -1/2.
inline ContourSpec default_contour(MBForm form) {
  return {form == MBForm::DescendingKernel ? 0.5 : -0.5, 0.0, 0};
}

/// rho = 2 sqrt(omega_l^2 + x^2) / omega_g, theta = arctan(x / omega_l).
struct PolarCoords {
  double rho = 0.0;
  double theta = 0.0;

  static PolarCoords from(double x, const LineParams& p) {
    return {2.0 * std::hypot(p.omega_l(), x) / p.omega_g(), std::atan2(x, p.omega_l())};
  }
};

/// log of the cosine-form integrand (without the 1/(pi omega_g) prefactor).
inline complex mb_log_integrand(MBForm form, const PolarCoords& pc, complex s) {
  const complex cosine = std::log(std::cos(s * pc.theta));
  const double log_rho = std::log(pc.rho);
  if (form == MBForm::DescendingKernel)
    return log_gamma(s) + log_gamma(0.5 - 0.5 * s) - s * log_rho + cosine;
  return log_gamma(-s) + log_gamma(0.5 + 0.5 * s) + s * log_rho + cosine;
}

/// Contour quadrature outcome with the diagnostics of the vertical-line rule.
struct ContourOutcome : EvalOutcome<double> {
  double height = 0.0;
  double step = 0.0;
  double decay_slope = 0.0;
};

namespace detail {

inline void check_contour(MBForm form, const ContourSpec& spec) {
  spec.validate();
  if (!contour_band(form).contains(spec.abscissa))
    throw ContourBandError("contour abscissa outside the legal band of the kernel");
}

inline std::uint32_t decay_flags(double x, const LineParams& p) {
  return (p.omega_l() == 0.0 && x != 0.0) ? flag_slow_decay : flag_none;
}

inline void check_rho(const PolarCoords& pc) {
  if (!(pc.rho > 0.0))
    throw DomainError("Mellin-Barnes contour needs rho > 0 (x = 0 with omega_l = 0); "
                      "use the ascending series");
}

}  // namespace detail

/// V(x) from the cosine form of either Mellin-Barnes integral, by trapezoidal
/// quadrature along Re(s) = spec.abscissa. The integrand at conj(s) is the
/// conjugate of the integrand at s, so only t >= 0 is sampled.
inline ContourOutcome mb_contour_eval(double x, const LineParams& p, MBForm form,
                                      const ContourSpec& spec) {
  detail::check_contour(form, spec);
  const PolarCoords pc = PolarCoords::from(x, p);
  detail::check_rho(pc);
  const auto band = contour_band(form);
  auto log_f = [&](complex s) { return mb_log_integrand(form, pc, s); };
  const auto r = detail::vertical_line_integral(log_f, spec, band.clearance(spec.abscissa), true);

  const double pre = 1.0 / (pi * p.omega_g());
  ContourOutcome out;
  out.value = pre * r.value.real();
  out.est_error = pre * r.est_error;
  out.work = r.nodes;
  out.method = form == MBForm::DescendingKernel ? Method::MBContour : Method::MBContourMirrored;
  out.flags = detail::decay_flags(x, p);
  out.height = r.height;
  out.step = r.step;
  out.decay_slope = r.decay_slope;
  return out;
}

inline ContourOutcome mb_contour_eval(double x, const LineParams& p,
                                      MBForm form = MBForm::DescendingKernel) {
  return mb_contour_eval(x, p, form, default_contour(form));
}

/// V(x) as the sum of the two conjugate Mellin-Barnes integrals in
/// Z^(-s) and conj(Z)^(-s) (or Z^s, conj(Z)^s for the ascending kernel),
/// each integrated over the full line without using the cosine combination.
inline ContourOutcome mb_conjugate_pair_eval(double x, const LineParams& p, MBForm form,
                                             const ContourSpec& spec) {
  detail::check_contour(form, spec);
  const complex z(2.0 * p.omega_l() / p.omega_g(), 2.0 * x / p.omega_g());
  if (z == 0.0) throw DomainError("Mellin-Barnes pair form needs Z != 0");
  const auto band = contour_band(form);
  const double clearance = band.clearance(spec.abscissa);

  auto single = [&](complex arg) {
    const complex log_arg = std::log(arg);
    auto log_f = [&](complex s) {
      if (form == MBForm::DescendingKernel)
        return log_gamma(s) + log_gamma(0.5 - 0.5 * s) - s * log_arg;
      return log_gamma(-s) + log_gamma(0.5 + 0.5 * s) + s * log_arg;
    };
    return detail::vertical_line_integral(log_f, spec, clearance, false);
  };
  const auto a = single(z);
  const auto b = single(std::conj(z));
  // Shared height so that both halves see the same rule.
  const double value =
      detail::real_of_conjugate_sum(a.value + b.value, std::abs(a.value));

  const double pre = 1.0 / (2.0 * pi * p.omega_g());
  ContourOutcome out;
  out.value = pre * value;
  out.est_error = pre * (a.est_error + b.est_error);
  out.work = a.nodes + b.nodes;
  out.method = Method::MBPair;
  out.flags = detail::decay_flags(x, p);
  out.height = std::max(a.height, b.height);
  out.step = a.step;
  out.decay_slope = std::max(a.decay_slope, b.decay_slope);
  return out;
}

inline ContourOutcome mb_conjugate_pair_eval(double x, const LineParams& p,
                                             MBForm form = MBForm::DescendingKernel) {
  return mb_conjugate_pair_eval(x, p, form, default_contour(form));
}

/// Orientation sign of the residue sums, fixed against V(0) = exp(1) erfc(1) / sqrt(pi)
/// for omega_g = omega_l = 1.
inline constexpr double ascending_series_sign = 1.0;

/// Largest rho accepted by the ascending series. Its terms peak near
/// exp(rho^2 / 4) before decaying, so beyond rho ~ 9 more than eight digits
/// are lost to cancellation.
inline constexpr double ascending_series_max_rho = 9.0;

/// Largest ratio max|partial sum| / |result| tolerated by the ascending series.
inline constexpr double ascending_series_cancellation_limit = 1e12;

/// V(x) = 1/(pi omega_g) sum_n (-1)^n / n! Gamma((n + 1)/2) cos(n theta) rho^n,
/// the residue sum over the poles of Gamma(s) at s = -n.
inline EvalOutcome<double> mb_ascending_series(double x, const LineParams& p,
                                               const Tolerance& tol = {}) {
  tol.validate();
  const PolarCoords pc = PolarCoords::from(x, p);
  if (pc.rho > ascending_series_max_rho)
    throw ConvergenceError("mb_ascending_series: rho beyond the cancellation-safe radius");

  // c_n = (-1)^n Gamma((n + 1)/2) / n! obeys c_n = c_{n-2} / (2n).
  double c_prev2 = sqrt_pi;  // c_0
  double c_prev1 = -1.0;     // c_1
  double rho_n = 1.0;
  double sum = 0.0;
  double max_partial = 0.0;
  double abs_sum = 0.0;
  double tail_max = 0.0;
  int quiet = 0;
  int n = 0;
  for (; quiet < 5; ++n) {
    if (n >= tol.max_work) throw ConvergenceError("mb_ascending_series: max_work reached");
    double c;
    if (n == 0) {
      c = c_prev2;
    } else if (n == 1) {
      c = c_prev1;
    } else {
      c = c_prev2 / (2.0 * n);
      c_prev2 = c_prev1;
      c_prev1 = c;
    }
    if (n > 0) rho_n *= pc.rho;
    const double term = c * std::cos(n * pc.theta) * rho_n;
    sum += term;
    abs_sum += std::abs(term);
    max_partial = std::max(max_partial, std::abs(sum));
    const double envelope = std::abs(c) * rho_n;
    if (envelope < tol.rel * std::abs(sum) || rho_n == 0.0) {
      ++quiet;
      tail_max = std::max(tail_max, std::abs(term));
    } else {
      quiet = 0;
      tail_max = 0.0;
    }
  }
  if (max_partial > ascending_series_cancellation_limit * std::abs(sum))
    throw ConvergenceError("mb_ascending_series: cancellation consumed more than 12 digits");

  const double pre = ascending_series_sign / (pi * p.omega_g());
  return {pre * sum, std::abs(pre) * (tail_max + 8.0 * machine_eps * abs_sum), n,
          Method::MBAscending};
}

/// Smallest rho accepted by the asymptotic series.
inline constexpr double asymptotic_series_min_rho = 8.0;

/// Coefficient 2 (-1)^m (2m)! / m! of the m-th asymptotic term.
inline double asymptotic_coefficient(int m) {
  double c = 2.0;
  for (int k = m + 1; k <= 2 * m; ++k) c *= k;
  return (m % 2 == 0) ? c : -c;
}

/// m-th term of the asymptotic series, including the 1/(pi omega_g) prefactor.
inline double asymptotic_term(int m, const PolarCoords& pc, double omega_g) {
  return asymptotic_coefficient(m) * std::cos((2 * m + 1) * pc.theta) *
         std::pow(pc.rho, -(2 * m + 1)) / (pi * omega_g);
}

/// Large-rho expansion from the poles of Gamma(1/2 - s/2). Sums at most
/// max_terms + 1 terms (m = 0..max_terms) and stops early at the smallest
/// term (optimal truncation). est_error is the first omitted term's envelope
/// plus the exponentially small part the expansion cannot represent.
inline EvalOutcome<double> mb_asymptotic_series(double x, const LineParams& p, int max_terms) {
  if (max_terms < 0) throw InvalidArgument("mb_asymptotic_series: max_terms must be >= 0");
  const PolarCoords pc = PolarCoords::from(x, p);
  if (pc.rho < asymptotic_series_min_rho)
    throw DomainError("mb_asymptotic_series: rho below the asymptotic threshold");

  const double pre = 1.0 / (pi * p.omega_g());
  const double inv_rho2 = 1.0 / (pc.rho * pc.rho);
  // envelope_m = 2 (2m)! / m! rho^-(2m+1), ratio envelope_{m+1}/envelope_m = 2 (2m + 1) / rho^2
  double envelope = 2.0 / pc.rho;
  double sum = 0.0;
  int m = 0;
  for (;; ++m) {
    sum += (m % 2 == 0 ? 1.0 : -1.0) * envelope * std::cos((2 * m + 1) * pc.theta);
    const double next = envelope * 2.0 * (2 * m + 1) * inv_rho2;
    if (m >= max_terms || next >= envelope) {
      envelope = next;
      break;
    }
    envelope = next;
  }
  // The expansion misses the Gaussian-like contribution exp(y^2 - x'^2), which
  // lies beyond all orders of 1/rho but dominates for small omega_l.
  const double xd = x / p.omega_g(), y = p.ratio();
  const double beyond = std::exp(y * y - xd * xd) * inv_sqrt_pi / p.omega_g();
  return {pre * sum, pre * envelope + beyond + 4.0 * machine_eps * std::abs(pre * sum), m + 1,
          Method::MBAsymptotic};
}

}  // namespace voigt
