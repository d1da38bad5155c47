#pragma once

// Trapezoidal quadrature of Mellin-Barnes integrals along a vertical line
//   (1 / 2 pi i) int_{c - i inf}^{c + i inf} f(s) ds = (1 / 2 pi) int f(c + i t) dt.
// The integrand is supplied as log f(s) so that Gamma products never overflow.
// For f analytic in a strip of half-width d around the line and decaying
// exponentially, the trapezoidal error falls like exp(-2 pi d / h).

#include <algorithm>
#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include "voigt/core.hpp"

namespace voigt {

/// Vertical contour Re(s) = abscissa. height <= 0 and nodes <= 0 select the
/// automatic choices (height from the measured decay, step from the pole
/// clearance). When given, nodes counts the points of a rule symmetric about
/// t = 0 and must be odd and >= 33.
struct ContourSpec {
  double abscissa = 0.5;
  double height = 0.0;
  int nodes = 0;

  void validate() const {
    if (!std::isfinite(abscissa)) throw InvalidArgument("contour abscissa must be finite");
    if (nodes != 0 && (nodes < 33 || nodes % 2 == 0))
      throw InvalidArgument("contour nodes must be odd and >= 33");
    if (height < 0.0 || !std::isfinite(height))
      throw InvalidArgument("contour height must be finite and >= 0");
  }
};

/// Open strip lower < Re(s) < upper free of poles.
struct ContourBand {
  double lower;
  double upper;

  bool contains(double c) const { return c > lower && c < upper; }
  double clearance(double c) const { return std::min(c - lower, upper - c); }
};

namespace detail {

struct ContourResult {
  complex value;
  double est_error = 0.0;
  long nodes = 0;
  double height = 0.0;
  double step = 0.0;
  /// Least-squares slope of log|f(c + i t)| over the outer half of [0, height].
  double decay_slope = 0.0;
};

inline constexpr double contour_max_height = 400.0;
// exp(-41.4) ~ 1e-18: integrand magnitude, relative to its peak, at which the
// automatic height stops.
inline constexpr double contour_log_cut = 41.4465316739;
// Strip fraction used for the step: exp(-2 pi (0.85 d) / h) = exp(-40).
inline constexpr double contour_step_exponent = 40.0;

inline double regression_slope(const std::vector<double>& t, const std::vector<double>& y) {
  const double n = static_cast<double>(t.size());
  double st = 0, sy = 0, stt = 0, sty = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    st += t[i];
    sy += y[i];
    stt += t[i] * t[i];
    sty += t[i] * y[i];
  }
  const double den = n * stt - st * st;
  return den > 0.0 ? (n * sty - st * sy) / den : 0.0;
}

// Marches along one direction (sign = +1 or -1) until log|f| has dropped by
// contour_log_cut below the peak. Returns the height and the fitted slope of
// log|f| against |t|.
template <class LogF>
std::pair<double, double> measure_decay(LogF& log_f, double c, double sign, double peak_log) {
  std::vector<double> ts, ls;
  double t = 0.0;
  const double dt = 0.5;
  double peak = peak_log;
  while (true) {
    t += dt;
    if (t > contour_max_height)
      throw DecayTooSlowError("contour integrand has not decayed by the maximum height");
    const double l = log_f(complex(c, sign * t)).real();
    ts.push_back(t);
    ls.push_back(l);
    peak = std::max(peak, l);
    if (t >= 2.0 && l < peak - contour_log_cut) break;
  }
  std::vector<double> tail_t, tail_l;
  for (std::size_t i = 0; i < ts.size(); ++i)
    if (ts[i] >= 0.5 * t) {
      tail_t.push_back(ts[i]);
      tail_l.push_back(ls[i]);
    }
  const double slope = regression_slope(tail_t, tail_l);
  if (!(slope < 0.0)) throw DecayTooSlowError("contour integrand does not decay");
  return {t, slope};
}

/// (1 / 2 pi i) int f(s) ds along Re(s) = spec.abscissa. pole_clearance is
/// the distance from the line to the nearest singularity. When
/// conj_symmetric, f(conj s) = conj f(s) is assumed and only t >= 0 is
/// sampled; the returned value is then real.
template <class LogF>
ContourResult vertical_line_integral(LogF&& log_f, const ContourSpec& spec, double pole_clearance,
                                     bool conj_symmetric) {
  const double c = spec.abscissa;
  const double l0 = log_f(complex(c, 0.0)).real();

  double height = spec.height;
  double slope = 0.0;
  {
    auto up = measure_decay(log_f, c, +1.0, l0);
    slope = up.second;
    double auto_height = up.first;
    if (!conj_symmetric) {
      auto down = measure_decay(log_f, c, -1.0, l0);
      auto_height = std::max(auto_height, down.first);
      slope = std::max(slope, down.second);
    }
    if (height <= 0.0) height = auto_height;
  }

  double step = 0.0;
  if (spec.nodes > 0) {
    step = 2.0 * height / (spec.nodes - 1);
  } else {
    step = 2.0 * pi * 0.85 * pole_clearance / contour_step_exponent;
  }
  const long half = std::max<long>(16, std::lround(std::ceil(height / step)));
  height = half * step;

  // Samples g[k] = f(c + i k h) (+ f(c - i k h) for the unsymmetric case).
  long evaluations = 0;
  std::vector<complex> g(half + 1);
  std::vector<double> mag(half + 1);
  for (long k = 0; k <= half; ++k) {
    const complex fp = std::exp(log_f(complex(c, k * step)));
    ++evaluations;
    g[k] = fp;
    mag[k] = std::abs(fp);
    if (!conj_symmetric && k > 0) {
      const complex fm = std::exp(log_f(complex(c, -k * step)));
      ++evaluations;
      g[k] += fm;
      mag[k] = std::max(mag[k], std::abs(fm));
    }
  }
  // Trapezoidal sums with step h and 2h over the same samples.
  const double w0 = conj_symmetric ? 0.5 : 1.0;
  auto trapezoid = [&](long stride, long last) {
    complex s = w0 * g[0];
    for (long k = stride; k <= last; k += stride) s += (k == last ? 0.5 : 1.0) * g[k];
    return s;
  };
  const complex sum_h = trapezoid(1, half);
  const complex sum_2h = trapezoid(2, half - half % 2);
  double l1 = 0.0;
  for (long k = 0; k <= half; ++k) l1 += std::abs(g[k]);
  const double end_magnitude = mag[half];

  // Scale to (1 / 2 pi) int dt; symmetric sums cover t >= 0 only.
  const double scale = conj_symmetric ? step / pi : step / (2.0 * pi);
  complex value = scale * sum_h;
  complex value_2h = 2.0 * scale * sum_2h;
  if (conj_symmetric) {
    value = value.real();
    value_2h = value_2h.real();
  }
  const double l1_scaled = scale * l1;

  // The trapezoidal error squares when the step halves.
  const double diff = std::abs(value - value_2h);
  const double disc = l1_scaled > 0.0 ? diff * std::min(1.0, diff / l1_scaled) : diff;
  const double tail = scale / step * end_magnitude / std::abs(slope);
  const double roundoff = 8.0 * machine_eps * l1_scaled * std::sqrt(double(half));
  return {value, disc + tail + roundoff, evaluations, height, step, slope};
}

}  // namespace detail

}  // namespace voigt
