#pragma once

// Complex error function family and the K(x, y) representations built on it.
//
// Convention: K(x, y) = Re w(x + i y) with y = omega_l / omega_g >= 0, where
// w(z) = exp(-z^2) erfc(-i z) is the Faddeeva function. The pair forms use
// v = y - i x, so that w(x + i y) = exp(v^2) erfc(v).

#include <cmath>
#include <complex>
#include <limits>

#include "voigt/core.hpp"
#include "voigt/gamma.hpp"

namespace voigt {

namespace detail {

struct FaddeevaRaw {
  complex value;
  int iterations;
};

// w(z) for x >= 0, y >= 0 (first quadrant).
//
// Three regions in the scaled radius q = (x/6.3)^2 + (y/4.4)^2:
//  * q < 0.085264: Maclaurin series of erf(-iz) in z^2, multiplied by exp(-z^2);
//  * q < 1: Laplace continued fraction truncated at depth nu and combined with
//    a Taylor expansion in the shift h (Gautschi's scheme);
//  * q >= 1: plain Laplace continued fraction.
// Depths are tuned so the relative error stays near 1e-14 on the plane.
inline FaddeevaRaw faddeeva_first_quadrant(double x, double y) {
  constexpr double two_over_sqrt_pi = 1.12837916709551257388;
  const double xs = x / 6.3;
  const double ys = y / 4.4;
  double q = xs * xs + ys * ys;
  const double x2 = x * x;
  const double re_z2 = x2 - y * y;  // Re(z^2)
  const double im_z2 = 2.0 * x * y;  // Im(z^2)

  if (q < 0.085264) {
    q = (1.0 - 0.85 * ys) * std::sqrt(q);
    const int n = static_cast<int>(std::lround(6.0 + 72.0 * q));
    int j = 2 * n + 1;
    double sum_re = 1.0 / j;
    double sum_im = 0.0;
    for (int i = n; i >= 1; --i) {
      j -= 2;
      const double t = (sum_re * re_z2 - sum_im * im_z2) / i;
      sum_im = (sum_re * im_z2 + sum_im * re_z2) / i;
      sum_re = t + 1.0 / j;
    }
    const double u1 = -two_over_sqrt_pi * (sum_re * y + sum_im * x) + 1.0;
    const double v1 = two_over_sqrt_pi * (sum_re * x - sum_im * y);
    const double e = std::exp(-re_z2);
    const double u2 = e * std::cos(im_z2);
    const double v2 = -e * std::sin(im_z2);
    return {{u1 * u2 - v1 * v2, u1 * v2 + v1 * u2}, n};
  }

  double h = 0.0;
  double h2 = 0.0;
  int kapn = 0;
  int nu = 0;
  if (q > 1.0) {
    q = std::sqrt(q);
    nu = static_cast<int>(3.0 + 1442.0 / (26.0 * q + 77.0));
  } else {
    q = (1.0 - ys) * std::sqrt(1.0 - q);
    h = 1.88 * q;
    h2 = 2.0 * h;
    kapn = static_cast<int>(std::lround(7.0 + 34.0 * q));
    nu = static_cast<int>(std::lround(16.0 + 26.0 * q));
  }

  const bool taylor = h > 0.0;
  double lambda = taylor ? std::pow(h2, kapn) : 0.0;
  double rx = 0.0, ry = 0.0, sx = 0.0, sy = 0.0;
  for (int n = nu; n >= 0; --n) {
    const double np1 = n + 1.0;
    double tx = y + h + np1 * rx;
    const double ty = x - np1 * ry;
    const double c = 0.5 / (tx * tx + ty * ty);
    rx = c * tx;
    ry = c * ty;
    if (taylor && n <= kapn) {
      tx = lambda + sx;
      sx = rx * tx - ry * sy;
      sy = ry * tx + rx * sy;
      lambda /= h2;
    }
  }
  complex w = taylor ? complex(two_over_sqrt_pi * sx, two_over_sqrt_pi * sy)
                     : complex(two_over_sqrt_pi * rx, two_over_sqrt_pi * ry);
  if (y == 0.0) w.real(std::exp(-x2));
  return {w, nu};
}

inline FaddeevaRaw faddeeva_upper(complex z) {
  auto r = faddeeva_first_quadrant(std::abs(z.real()), z.imag());
  if (z.real() < 0.0) r.value = std::conj(r.value);
  return r;
}

inline complex checked_exp(complex e, const char* what) {
  if (e.real() > std::log(std::numeric_limits<double>::max()))
    throw OverflowError(what, e);
  return std::exp(e);
}

}  // namespace detail

/// Faddeeva function w(z) = exp(-z^2) erfc(-iz). The lower half-plane is
/// reached through w(z) = 2 exp(-z^2) - w(-z).
inline complex faddeeva_w(complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw InvalidArgument("faddeeva_w: non-finite argument");
  if (z.imag() >= 0.0) return detail::faddeeva_upper(z).value;
  const complex e = detail::checked_exp(-z * z, "faddeeva_w: exp(-z^2) overflows");
  return 2.0 * e - detail::faddeeva_upper(-z).value;
}

/// Scaled complementary error function exp(z^2) erfc(z).
inline complex erfcx(complex z) {
  if (z.real() >= 0.0) return faddeeva_w(complex(-z.imag(), z.real()));
  const complex e = detail::checked_exp(z * z, "erfcx: exp(z^2) overflows");
  return 2.0 * e - faddeeva_w(complex(z.imag(), -z.real()));
}

inline complex erfc_complex(complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw InvalidArgument("erfc_complex: non-finite argument");
  if (z.real() < 0.0) return 2.0 - erfc_complex(-z);
  const complex scaled = erfcx(z);
  const complex log_value = -z * z + std::log(scaled);
  if (log_value.real() > std::log(std::numeric_limits<double>::max()))
    throw OverflowError("erfc_complex: result exceeds the double range, use erfcx", log_value);
  return std::exp(-z * z) * scaled;
}

/// Radius inside which dawson() sums its own Maclaurin series.
inline constexpr double dawson_series_radius = 2.5;

/// Dawson function F(z) = exp(-z^2) int_0^z exp(t^2) dt. Maclaurin series for
/// |z| <= 2.5; outside, F(z) = (i sqrt(pi) / 2) (exp(-z^2) - w(z)) with the
/// odd reflection for Im(z) < 0.
inline complex dawson(complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw InvalidArgument("dawson: non-finite argument");
  if (std::abs(z) <= dawson_series_radius) {
    const complex m = -2.0 * z * z;
    complex term = z;
    complex sum = z;
    for (int n = 1; n < 200; ++n) {
      term *= m / (2.0 * n + 1.0);
      sum += term;
      if (std::abs(term) <= 0.25 * machine_eps * std::abs(sum)) break;
    }
    if (z.imag() == 0.0) sum.imag(0.0);
    return sum;
  }
  if (z.imag() < 0.0) return -dawson(-z);
  const complex e = detail::checked_exp(-z * z, "dawson: exp(-z^2) overflows");
  return complex(0.0, 0.5 * sqrt_pi) * (e - faddeeva_w(z));
}

inline double dawson(double x) { return dawson(complex(x, 0.0)).real(); }

namespace detail {

struct SeriesRaw {
  complex sum;
  double last_term;
  double peak_term;
  int terms;
};

inline SeriesRaw kummer_series(complex a, complex b, complex z, const Tolerance& tol) {
  if (is_nonpositive_integer(b)) throw PoleError("kummer_1f1: b is a non-positive integer");
  complex term = 1.0;
  complex sum = 1.0;
  double peak = 1.0;
  int quiet = 0;
  int n = 0;
  while (quiet < 3) {
    if (n >= tol.max_work) throw ConvergenceError("kummer_1f1: max_work reached");
    term *= (a + double(n)) / ((b + double(n)) * double(n + 1)) * z;
    ++n;
    sum += term;
    peak = std::max(peak, std::abs(term));
    quiet = (std::abs(term) < tol.rel * std::abs(sum) || term == 0.0) ? quiet + 1 : 0;
  }
  return {sum, std::abs(term), peak, n};
}

}  // namespace detail

/// Confluent hypergeometric 1F1(a; b; z) by its Kummer series. Stops once
/// three consecutive terms are below tol.rel * |partial sum|. est_error is the
/// last term plus the round-off floor eps * (largest term).
inline EvalOutcome<complex> kummer_1f1(complex a, complex b, complex z, const Tolerance& tol = {}) {
  tol.validate();
  const auto s = detail::kummer_series(a, b, z, tol);
  return {s.sum, s.last_term + machine_eps * s.peak_term, s.terms, Method::Series};
}

/// Relative round-off estimate above which the series representations refuse a
/// point as outside their practical domain.
inline constexpr double series_domain_limit = 1e-9;

/// K(x, y) from its power series in x^2 with 1F1 coefficients:
///   sum_n (-1)^n { 1F1(n + 1/2; 1/2; y^2) / n!
///                  - 2y 1F1(n + 1; 3/2; y^2) / Gamma(n + 1/2) } x^(2n).
/// Round-off grows with x and y (the two pieces in braces cancel); in testing
/// the relative error stays below 1e-9 for |x| <= 3 when y <= 0.1, |x| <= 2.5
/// when y = 1 and |x| <= 1.5 when y = 2. Outside, ConvergenceError.
inline EvalOutcome<double> k_dirocco_series(DimensionlessPoint pt, const Tolerance& tol = {}) {
  pt.validate();
  tol.validate();
  const double y = pt.y;
  const double y2 = y * y;
  const double x2 = pt.x * pt.x;
  Tolerance inner = tol;
  inner.rel = std::max(tol.rel * 1e-2, 4.0 * machine_eps);

  double sum = 0.0;
  double magnitude = 0.0;
  double last = 0.0;
  double factorial = 1.0;
  double gamma_half = sqrt_pi;  // Gamma(n + 1/2)
  double power = 1.0;           // x^(2n)
  long work = 0;
  int quiet = 0;
  int n = 0;
  for (; quiet < 5; ++n) {
    if (n >= tol.max_work) throw ConvergenceError("k_dirocco_series: max_work reached");
    if (n > 0) {
      factorial *= n;
      gamma_half *= n - 0.5;
      power *= x2;
    }
    const auto a = detail::kummer_series(n + 0.5, 0.5, y2, inner);
    const auto b = detail::kummer_series(n + 1.0, 1.5, y2, inner);
    work += a.terms + b.terms;
    const double p1 = a.sum.real() / factorial;
    const double p2 = 2.0 * y * b.sum.real() / gamma_half;
    const double term = ((n % 2 == 0) ? 1.0 : -1.0) * (p1 - p2) * power;
    sum += term;
    magnitude += (p1 + p2) * power;
    last = std::abs(term);
    if (!std::isfinite(sum)) throw ConvergenceError("k_dirocco_series: overflow in the series");
    quiet = (last < tol.rel * std::abs(sum) || power == 0.0) ? quiet + 1 : 0;
  }
  const double roundoff = machine_eps * magnitude;
  if (!(roundoff <= series_domain_limit * std::abs(sum)))
    throw ConvergenceError("k_dirocco_series: cancellation exceeds the practical radius");
  return {sum, last + roundoff, work, Method::DiRocco};
}

namespace detail {

// exp(u/2) W_{-1/4,-1/4}(u) expressed through the root v = sqrt(u), Re v >= 0:
// W_{-1/4,-1/4}(v^2) = sqrt(pi) v^(1/2) exp(v^2/2) erfc(v).
inline complex whittaker_from_root(complex v) {
  const complex u = v * v;
  if (std::abs(u.real()) * 0.5 > 700.0)
    throw OverflowGuardError("whittaker_w_quarter: exp(u/2) outside the double range");
  return sqrt_pi * std::sqrt(v) * std::exp(-0.5 * u) * erfcx(v);
}

}  // namespace detail

/// Whittaker W_{-1/4,-1/4}(u) = sqrt(pi) u^(1/4) exp(u/2) erfc(sqrt(u)), principal
/// branches, cut along the negative real axis.
inline complex whittaker_w_quarter(complex u) {
  if (!std::isfinite(u.real()) || !std::isfinite(u.imag()))
    throw InvalidArgument("whittaker_w_quarter: non-finite argument");
  if (u.imag() == 0.0 && u.real() < 0.0)
    throw BranchCutError("whittaker_w_quarter: argument on the negative real axis");
  if (u == 0.0) return 0.0;
  complex w = detail::whittaker_from_root(std::sqrt(u));
  if (u.imag() == 0.0) w.imag(0.0);
  return w;
}

/// Parabolic cylinder D_{-1}(u) = sqrt(pi/2) exp(u^2/4) erfc(u / sqrt(2)).
inline complex parabolic_d_minus1(complex u) {
  if (!std::isfinite(u.real()) || !std::isfinite(u.imag()))
    throw InvalidArgument("parabolic_d_minus1: non-finite argument");
  const complex e = detail::checked_exp(-0.25 * u * u, "parabolic_d_minus1: overflow");
  complex d = std::sqrt(0.5 * pi) * e * erfcx(u / std::sqrt(2.0));
  if (u.imag() == 0.0) d.imag(0.0);
  return d;
}

namespace detail {

inline void guard_exponent(double e, const char* what) {
  if (std::abs(e) > 700.0) throw MethodDomainError(what);
}

// Round-off of a pair sum relative to its summands.
inline double pair_error(complex a, complex b, double value) {
  return 8.0 * machine_eps * (std::abs(a) + std::abs(b) + std::abs(value));
}

inline EvalOutcome<double> k_faddeeva(DimensionlessPoint pt) {
  const auto r = faddeeva_upper(complex(pt.x, pt.y));
  return {r.value.real(), 4e-15 * std::abs(r.value), r.iterations + 1, Method::Faddeeva};
}

inline EvalOutcome<double> k_dawson(DimensionlessPoint pt) {
  const complex z(pt.x, pt.y);
  guard_exponent(pt.y * pt.y - pt.x * pt.x, "dawson form: exp(-z^2) out of range");
  const complex e = std::exp(-z * z);
  const complex f = dawson(z);
  const complex w = e + complex(0.0, 2.0 * inv_sqrt_pi) * f;
  const double err = 8.0 * machine_eps * (std::abs(e) + 2.0 * inv_sqrt_pi * std::abs(f)) +
                     4e-15 * std::abs(w);
  return {w.real(), err, 1, Method::Dawson};
}

inline EvalOutcome<double> k_hyp1f1(DimensionlessPoint pt, const Tolerance& tol) {
  const double x = pt.x, y = pt.y;
  guard_exponent(y * y - x * x, "1F1 form: exp(y^2 - x^2) out of range");
  const double first = std::exp(y * y - x * x) * std::cos(2.0 * x * y);
  const complex u(y, x);
  const complex ub(y, -x);
  Tolerance inner = tol;
  inner.rel = std::max(tol.rel * 1e-2, 4.0 * machine_eps);
  SeriesRaw fu, fb;
  try {
    fu = kummer_series(1.0, 1.5, u * u, inner);
    fb = kummer_series(1.0, 1.5, ub * ub, inner);
  } catch (const ConvergenceError&) {
    throw MethodDomainError("1F1 form: series budget exhausted");
  }
  const complex pu = u * fu.sum;
  const complex pb = ub * fb.sum;
  const double second = real_of_conjugate_sum(pu + pb, std::abs(pu)) * inv_sqrt_pi;
  const double k = first - second;
  const double roundoff =
      machine_eps * (std::abs(first) + 2.0 * inv_sqrt_pi * std::abs(u) * fu.peak_term);
  if (!(roundoff <= series_domain_limit * std::abs(k)))
    throw MethodDomainError("1F1 form: cancellation outside the practical domain");
  return {k, roundoff + (fu.last_term + fb.last_term) * std::abs(u), long(fu.terms + fb.terms),
          Method::Hyp1F1};
}

inline EvalOutcome<double> k_erfc(DimensionlessPoint pt) {
  const complex v(pt.y, -pt.x);
  const complex vb = std::conj(v);
  guard_exponent((v * v).real(), "erfc form: exp(v^2) out of range");
  const complex a = std::exp(v * v) * erfc_complex(v);
  const complex b = std::exp(vb * vb) * erfc_complex(vb);
  const double k = 0.5 * real_of_conjugate_sum(a + b, std::abs(a));
  return {k, pair_error(a, b, k) + 4e-15 * std::abs(a), 2, Method::Erfc};
}

inline EvalOutcome<double> k_whittaker(DimensionlessPoint pt) {
  const complex v(pt.y, -pt.x);
  const complex vb = std::conj(v);
  guard_exponent((v * v).real(), "Whittaker form: exp(v^2/2) out of range");
  auto term = [](complex r) {
    if (r == 0.0) return complex(sqrt_pi);  // limit v^(-1/2) W(v^2) -> sqrt(pi) v^0
    return std::pow(r, -0.5) * std::exp(0.5 * r * r) * detail::whittaker_from_root(r);
  };
  const complex a = term(v);
  const complex b = term(vb);
  const double k = 0.5 * inv_sqrt_pi * real_of_conjugate_sum(a + b, std::abs(a));
  return {k, pair_error(a, b, k) + 4e-15 * std::abs(a), 2, Method::Whittaker};
}

inline EvalOutcome<double> k_parabolic(DimensionlessPoint pt) {
  const double x = pt.x, y = pt.y;
  const complex v(y, -x);
  const complex vb = std::conj(v);
  guard_exponent(y * y - x * x, "D_{-1} form: exp(v^2) out of range");
  const complex phase(std::cos(x * y), -std::sin(x * y));  // exp(-i x y)
  const complex a = phase * parabolic_d_minus1(std::sqrt(2.0) * v);
  const complex b = std::conj(phase) * parabolic_d_minus1(std::sqrt(2.0) * vb);
  const double pre = std::exp(0.5 * (y * y - x * x)) / std::sqrt(2.0 * pi);
  const double k = pre * real_of_conjugate_sum(a + b, std::abs(a));
  return {k, pre * pair_error(a, b, 0.0) + 4e-15 * pre * std::abs(a), 2,
          Method::ParabolicCylinder};
}

}  // namespace detail

/// K(x, y) through one of the complex-error-function representations.
/// V(x) = K(x / omega_g, omega_l / omega_g) / (sqrt(pi) omega_g).
inline EvalOutcome<double> k_voigt(DimensionlessPoint pt, Method method,
                                   const Tolerance& tol = {}) {
  pt.validate();
  tol.validate();
  EvalOutcome<double> out;
  switch (method) {
    case Method::Faddeeva: out = detail::k_faddeeva(pt); break;
    case Method::Dawson: out = detail::k_dawson(pt); break;
    case Method::Hyp1F1: out = detail::k_hyp1f1(pt, tol); break;
    case Method::DiRocco:
      try {
        out = k_dirocco_series(pt, tol);
      } catch (const ConvergenceError& e) {
        throw MethodDomainError(e.what());
      }
      break;
    case Method::Whittaker: out = detail::k_whittaker(pt); break;
    case Method::Erfc: out = detail::k_erfc(pt); break;
    case Method::ParabolicCylinder: out = detail::k_parabolic(pt); break;
    default:
      throw InvalidArgument("k_voigt: '" + std::string(method_name(method)) +
                            "' is not a complex-error-function representation");
  }
  if (!(out.value > 0.0) || !std::isfinite(out.value))
    throw ConvergenceError("k_voigt: non-positive or non-finite K");
  return out;
}

}  // namespace voigt
