#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>

namespace voigt {

using complex = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double sqrt_pi = 1.7724538509055160273;
inline constexpr double inv_sqrt_pi = std::numbers::inv_sqrtpi;
inline constexpr double machine_eps = std::numeric_limits<double>::epsilon();

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid parameters (widths, tolerances, grids).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class PoleError : public Error {
 public:
  using Error::Error;
};

/// The result is not representable as a double. The payload carries the
/// logarithm of the value so callers can still work in log space.
class OverflowError : public Error {
 public:
  OverflowError(const std::string& what, complex log_value)
      : Error(what), log_value_(log_value) {}

  complex log_value() const noexcept { return log_value_; }
  double log_magnitude() const noexcept { return log_value_.real(); }
  double phase() const noexcept { return log_value_.imag(); }

 private:
  complex log_value_;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

class DegenerateWidthError : public Error {
 public:
  using Error::Error;
};

class OverflowGuardError : public Error {
 public:
  using Error::Error;
};

class BranchCutError : public Error {
 public:
  using Error::Error;
};

/// The requested method does not cover the requested point. Distinct from a
/// numerical failure inside the method's domain.
class MethodDomainError : public Error {
 public:
  using Error::Error;
};

class ContourBandError : public Error {
 public:
  using Error::Error;
};

class DecayTooSlowError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class ExistenceError : public Error {
 public:
  using Error::Error;
};

class StructureError : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Domain types
// ---------------------------------------------------------------------------

/// Widths of one Voigt profile: Gaussian omega_g > 0, Lorentzian omega_l >= 0.
class LineParams {
 public:
  LineParams(double omega_g, double omega_l) : omega_g_(omega_g), omega_l_(omega_l) {
    if (!(omega_g > 0.0) || !std::isfinite(omega_g))
      throw InvalidArgument("omega_g must be finite and > 0");
    if (!(omega_l >= 0.0) || !std::isfinite(omega_l))
      throw InvalidArgument("omega_l must be finite and >= 0");
  }

  /// Parameters from omega_g and the width ratio a = omega_l / omega_g.
  static LineParams from_ratio(double omega_g, double a) { return {omega_g, a * omega_g}; }

  double omega_g() const noexcept { return omega_g_; }
  double omega_l() const noexcept { return omega_l_; }
  double ratio() const noexcept { return omega_l_ / omega_g_; }

 private:
  double omega_g_;
  double omega_l_;
};

/// Dimensionless point (x / omega_g, omega_l / omega_g) for the K(x, y) kernel.
struct DimensionlessPoint {
  double x = 0.0;
  double y = 0.0;

  static DimensionlessPoint from(double x, const LineParams& p) {
    return {x / p.omega_g(), p.ratio()};
  }
  void validate() const {
    if (!std::isfinite(x) || !std::isfinite(y) || !(y >= 0.0))
      throw InvalidArgument("dimensionless point needs finite x and y >= 0");
  }
};

struct Tolerance {
  double rel = 1e-14;
  double abs = 1e-300;
  int max_work = 2000;

  void validate() const {
    if (!(rel >= 4.0 * machine_eps) || !std::isfinite(rel))
      throw InvalidArgument("tolerance rel must be >= 4 * machine epsilon");
    if (!(abs > 0.0)) throw InvalidArgument("tolerance abs must be > 0");
    if (max_work < 8) throw InvalidArgument("tolerance max_work must be >= 8");
  }
};

enum class Method : std::uint8_t {
  // quadrature oracles
  Convolution,
  Reiche,
  Zaghloul,
  // complex error function family
  Faddeeva,
  Dawson,
  Hyp1F1,
  DiRocco,
  Whittaker,
  Erfc,
  ParabolicCylinder,
  // Mellin-Barnes
  MBContour,
  MBContourMirrored,
  MBPair,
  MBAscending,
  MBAsymptotic,
  // Fox H / Meijer G
  FoxH,
  MeijerG,
  // helpers that are not Voigt evaluators on their own
  Series,
  Quadrature,
};

inline constexpr Method k_methods[] = {Method::Faddeeva, Method::Dawson, Method::Hyp1F1,
                                       Method::DiRocco,  Method::Whittaker, Method::Erfc,
                                       Method::ParabolicCylinder};

inline constexpr Method voigt_methods[] = {
    Method::Convolution, Method::Reiche,       Method::Zaghloul,          Method::Faddeeva,
    Method::Dawson,      Method::Hyp1F1,       Method::DiRocco,           Method::Whittaker,
    Method::Erfc,        Method::ParabolicCylinder, Method::MBContour,    Method::MBContourMirrored,
    Method::MBPair,      Method::MBAscending,  Method::MBAsymptotic,      Method::FoxH,
    Method::MeijerG};

constexpr std::string_view method_name(Method m) {
  switch (m) {
    case Method::Convolution: return "convolution";
    case Method::Reiche: return "reiche";
    case Method::Zaghloul: return "zaghloul";
    case Method::Faddeeva: return "faddeeva";
    case Method::Dawson: return "dawson";
    case Method::Hyp1F1: return "hyp1f1";
    case Method::DiRocco: return "dirocco";
    case Method::Whittaker: return "whittaker";
    case Method::Erfc: return "erfc";
    case Method::ParabolicCylinder: return "parabolic";
    case Method::MBContour: return "mb-contour";
    case Method::MBContourMirrored: return "mb-contour-mirrored";
    case Method::MBPair: return "mb-pair";
    case Method::MBAscending: return "mb-ascending";
    case Method::MBAsymptotic: return "mb-asymptotic";
    case Method::FoxH: return "fox-h";
    case Method::MeijerG: return "meijer-g";
    case Method::Series: return "series";
    case Method::Quadrature: return "quadrature";
  }
  return "unknown";
}

inline Method parse_method(std::string_view name) {
  for (Method m : voigt_methods)
    if (method_name(m) == name) return m;
  throw InvalidArgument("unknown method '" + std::string(name) + "'");
}

enum OutcomeFlags : std::uint32_t {
  flag_none = 0,
  /// Contour decay margin is at its minimum (omega_l = 0, x != 0).
  flag_slow_decay = 1u << 0,
  /// A residue series hit its cancellation guard and a contour integral was used.
  flag_contour_fallback = 1u << 1,
  /// H-function evaluated through the s -> -s relabeled parameter set.
  flag_relabeled = 1u << 2,
};

/// A value with forward accuracy metadata. est_error is an estimate, not a bound.
template <class T>
struct EvalOutcome {
  T value{};
  double est_error = 0.0;
  long work = 0;
  Method method = Method::Series;
  std::uint32_t flags = flag_none;

  bool has(OutcomeFlags f) const noexcept { return (flags & f) != 0; }
};

namespace detail {

inline bool is_nonpositive_integer(complex z) {
  if (z.imag() != 0.0 || z.real() > 0.0) return false;
  return std::abs(z.real() - std::nearbyint(z.real())) < 1e-300;
}

/// Drops the imaginary part of f(Z) + f(conj Z) after checking it is round-off
/// sized relative to the magnitude of the summands.
inline double real_of_conjugate_sum(complex sum, double term_scale, double rel_limit = 1e-13) {
  const double scale = std::max(std::abs(sum.real()), term_scale);
  if (std::abs(sum.imag()) > rel_limit * scale && std::abs(sum.imag()) > 1e-300)
    throw ConvergenceError("conjugate-pair sum has a non-negligible imaginary part");
  return sum.real();
}

}  // namespace detail

}  // namespace voigt
