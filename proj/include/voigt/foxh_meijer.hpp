#pragma once

// Fox H^{11}_{11} and Meijer G^{21}_{12} forms of the Voigt profile.
//
//   H^{mn}_{pq}[z] = (1/2 pi i) int h(s) z^s ds,
//   h(s) = prod_{j<=m} Gamma(b_j - B_j s) prod_{j<=n} Gamma(1 - a_j + A_j s)
//          / (prod_{j>m} Gamma(1 - b_j + B_j s) prod_{j>n} Gamma(a_j - A_j s)).
//
// With Z = 2 (omega_l + i x) / omega_g,
//
//   V(x) = 1/(2 pi omega_g) {H[Z | (1/2,1/2); (0,1)] + H[conj Z | ...]}
//        = 1/(2 pi omega_g) {H[1/Z | (1,1); (1/2,1/2)] + H[1/conj Z | ...]}
//        = 1/(2 pi^(3/2) omega_g) {G[Z^2/4 | 1/2; 0, 1/2] + G[conj(Z)^2/4 | ...]}
//
// and G^{21}_{12}[u | 1/2; 0, 1/2] = pi exp(u) erfc(sqrt u)
//                                  = sqrt(2 pi) exp(u/2) D_{-1}(sqrt(2u))
//                                  = sqrt(pi) u^(-1/4) exp(u/2) W_{-1/4,-1/4}(u).

#include <cmath>
#include <complex>
#include <vector>

#include "voigt/cerf.hpp"
#include "voigt/contour.hpp"
#include "voigt/core.hpp"
#include "voigt/gamma.hpp"
#include "voigt/method_report.hpp"

namespace voigt {

struct HPair {
  complex a;
  double A;
};

struct HParams {
  int m = 0, n = 0, p = 0, q = 0;
  std::vector<HPair> upper;  // (a_j, A_j), j = 1..p
  std::vector<HPair> lower;  // (b_j, B_j), j = 1..q

  void validate() const {
    if (m < 0 || n < 0 || p < 0 || q < 0) throw StructureError("H parameters: negative order");
    if (m > q || n > p) throw StructureError("H parameters: need 0 <= m <= q and 0 <= n <= p");
    if (upper.size() != std::size_t(p) || lower.size() != std::size_t(q))
      throw StructureError("H parameters: list lengths do not match p and q");
    for (const auto* list : {&upper, &lower})
      for (const auto& e : *list)
        if (!(e.A > 0.0) || !std::isfinite(e.A))
          throw StructureError("H parameters: scale factors must be positive");
  }

  /// Meijer G parameters: every scale factor equal to one.
  static HParams meijer(int m, int n, std::vector<complex> a, std::vector<complex> b) {
    HParams h{m, n, int(a.size()), int(b.size()), {}, {}};
    for (auto v : a) h.upper.push_back({v, 1.0});
    for (auto v : b) h.lower.push_back({v, 1.0});
    return h;
  }
};

/// {(1/2, 1/2); (0, 1)}: argument Z.
inline HParams h_params_ascending() { return {1, 1, 1, 1, {{0.5, 0.5}}, {{0.0, 1.0}}}; }

/// {(1, 1); (1/2, 1/2)}: argument 1/Z.
inline HParams h_params_descending() { return {1, 1, 1, 1, {{1.0, 1.0}}, {{0.5, 0.5}}}; }

enum class HVerdict { AllNonzeroZ, DiskOnly, Invalid };

constexpr std::string_view verdict_name(HVerdict v) {
  switch (v) {
    case HVerdict::AllNonzeroZ: return "AllNonzeroZ";
    case HVerdict::DiskOnly: return "DiskOnly";
    case HVerdict::Invalid: return "Invalid";
  }
  return "unknown";
}

struct HExistence {
  double mu = 0.0;
  double beta = 1.0;
  HVerdict verdict = HVerdict::Invalid;

  bool permits(complex z) const {
    if (z == 0.0) return false;
    if (verdict == HVerdict::AllNonzeroZ) return true;
    return verdict == HVerdict::DiskOnly && std::abs(z) < 1.0 / beta;
  }
};

/// mu = sum B_j - sum A_j, beta = prod A_j^A_j prod B_j^-B_j. Sums run in a
/// fixed order, so unit and half-integer scale factors give exact mu.
inline HExistence h_existence(const HParams& params) {
  params.validate();
  HExistence e;
  double sum_a = 0.0, sum_b = 0.0, log_beta = 0.0;
  for (const auto& u : params.upper) {
    sum_a += u.A;
    log_beta += u.A * std::log(u.A);
  }
  for (const auto& l : params.lower) {
    sum_b += l.A;
    log_beta -= l.A * std::log(l.A);
  }
  e.mu = sum_b - sum_a;
  e.beta = std::exp(log_beta);
  e.verdict = e.mu > 0.0 ? HVerdict::AllNonzeroZ
              : e.mu == 0.0 ? HVerdict::DiskOnly
                            : HVerdict::Invalid;
  return e;
}

/// Contour band of H^{11}_{11}: between the poles of Gamma(1 - a + A s) on
/// the left and those of Gamma(b - B s) on the right.
inline ContourBand h_band(const HParams& h) {
  const auto& up = h.upper[0];
  const auto& lo = h.lower[0];
  return {(up.a.real() - 1.0) / up.A, lo.a.real() / lo.A};
}

inline ContourSpec h_default_contour(const HParams& h) {
  const auto band = h_band(h);
  return {0.5 * (band.lower + band.upper), 0.0, 0};
}

namespace detail {

inline void require_h11_11(const HParams& h) {
  h.validate();
  if (h.m != 1 || h.n != 1 || h.p != 1 || h.q != 1)
    throw StructureError("h11_11_eval: parameters must have m = n = p = q = 1");
  if (h.upper[0].a.imag() != 0.0 || h.lower[0].a.imag() != 0.0)
    throw StructureError("h11_11_eval: only real a and b are supported");
}

/// H^{mn}_{pq}(z) = H^{nm}_{qp}(1/z) with (a, A) -> (1 - b, B) and (b, B) -> (1 - a, A).
inline HParams mirror(const HParams& h) {
  return {1, 1, 1, 1, {{1.0 - h.lower[0].a, h.lower[0].A}}, {{1.0 - h.upper[0].a, h.upper[0].A}}};
}

inline EvalOutcome<complex> h11_11_direct(complex z, const HParams& h, const ContourSpec& spec) {
  const auto band = h_band(h);
  if (!band.contains(spec.abscissa))
    throw ContourBandError("h11_11_eval: contour abscissa outside the band of the parameters");
  const double a = h.upper[0].a.real(), A = h.upper[0].A;
  const double b = h.lower[0].a.real(), B = h.lower[0].A;
  const double rate = 0.5 * pi * (A + B) - std::abs(std::arg(z));
  if (!(rate > 0.0))
    throw ExistenceError("h11_11_eval: vertical-line integral diverges for this arg(z)");
  const complex log_z = std::log(z);
  auto log_f = [&](complex s) {
    return log_gamma(b - B * s) + log_gamma(1.0 - a + A * s) + s * log_z;
  };
  const bool real_z = z.imag() == 0.0 && z.real() > 0.0;
  const auto r = vertical_line_integral(log_f, spec, band.clearance(spec.abscissa), real_z);
  return {r.value, r.est_error, r.nodes, Method::FoxH};
}

}  // namespace detail

/// H^{11}_{11}[z | (a, A); (b, B)] by vertical-line quadrature. A parameter
/// set whose existence verdict is Invalid (mu < 0) is evaluated through the
/// s -> -s relabeling, which maps it onto a mu > 0 set at 1/z; the contour
/// abscissa is mirrored with it and the outcome carries flag_relabeled.
inline EvalOutcome<complex> h11_11_eval(complex z, const HParams& params, const ContourSpec& spec) {
  detail::require_h11_11(params);
  spec.validate();
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw InvalidArgument("h11_11_eval: non-finite argument");
  if (z == 0.0) throw ExistenceError("h11_11_eval: z = 0");
  const auto ex = h_existence(params);
  if (ex.permits(z)) return detail::h11_11_direct(z, params, spec);
  if (ex.verdict == HVerdict::Invalid) {
    if (!h_band(params).contains(spec.abscissa))
      throw ContourBandError("h11_11_eval: contour abscissa outside the band of the parameters");
    const HParams mirrored = detail::mirror(params);
    ContourSpec ms = spec;
    ms.abscissa = -spec.abscissa;
    auto out = detail::h11_11_direct(1.0 / z, mirrored, ms);
    out.flags |= flag_relabeled;
    return out;
  }
  throw ExistenceError("h11_11_eval: |z| outside the disk of convergence (mu = 0)");
}

inline EvalOutcome<complex> h11_11_eval(complex z, const HParams& params) {
  detail::require_h11_11(params);
  return h11_11_eval(z, params, h_default_contour(params));
}

/// Largest round-off, relative to the result, accepted from the G residue
/// series before switching to the contour integral.
inline constexpr double meijer_series_rel_limit = 1e-12;

namespace detail {

inline void check_meijer_params(double a, double b, double c) {
  if (a != 0.5 || b != 0.0 || c != 0.5)
    throw InvalidArgument("g21_12_eval: only the parameter set a = 1/2; b = 0, c = 1/2 is supported");
}

// Residues at s = n (from Gamma(-s)) and s = n + 1/2 (from Gamma(1/2 - s)),
// interleaved by |s|. Gamma(1/2 + n) Gamma(1/2 - n) = (-1)^n pi collapses
// them to pi sum_k (-sqrt u)^k / Gamma(k/2 + 1).
struct MeijerSeries {
  complex sum;
  double last = 0.0;
  double peak = 0.0;
  int terms = 0;
};

inline MeijerSeries meijer_residue_series(complex u, const Tolerance& tol) {
  const complex r = std::sqrt(u);
  complex even = 1.0;                       // u^n / n!
  complex odd = 2.0 * inv_sqrt_pi * r;      // u^(n + 1/2) / Gamma(n + 3/2)
  MeijerSeries s;
  s.sum = 0.0;
  int quiet = 0;
  for (int k = 0;; ++k) {
    if (k >= tol.max_work) throw ConvergenceError("g21_12_eval: max_work reached");
    complex term;
    if (k % 2 == 0) {
      term = even;
      even *= u / (0.5 * k + 1.0);
    } else {
      term = -odd;
      odd *= u / (0.5 * k + 1.0);
    }
    s.sum += term;
    const double mag = std::abs(term);
    s.peak = std::max(s.peak, mag);
    s.terms = k + 1;
    if (mag <= tol.rel * std::abs(s.sum) || mag == 0.0) {
      s.last = std::max(s.last, mag);
      if (++quiet >= 5) break;
    } else {
      quiet = 0;
      s.last = 0.0;
    }
  }
  return s;
}

inline EvalOutcome<complex> meijer_contour(complex u) {
  const complex log_u = std::log(u);
  auto log_f = [&](complex s) {
    return log_gamma(-s) + log_gamma(0.5 - s) + log_gamma(0.5 + s) + s * log_u;
  };
  // Poles at s = -1/2 and s = 0 bound the band.
  const ContourSpec spec{-0.25, 0.0, 0};
  const bool real_u = u.imag() == 0.0;
  const auto r = vertical_line_integral(log_f, spec, 0.25, real_u);
  return {r.value, r.est_error, r.nodes, Method::MeijerG, flag_contour_fallback};
}

}  // namespace detail

/// G^{21}_{12}[z | a; b, c] for (a; b, c) = (1/2; 0, 1/2), principal branch.
/// Sums the residue series; when its round-off would exceed
/// meijer_series_rel_limit of the result (large |z|), integrates along
/// Re(s) = -1/4 instead and sets flag_contour_fallback.
inline EvalOutcome<complex> g21_12_eval(complex z, double a, double b, double c,
                                        const Tolerance& tol = {}) {
  detail::check_meijer_params(a, b, c);
  tol.validate();
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw InvalidArgument("g21_12_eval: non-finite argument");
  if (z.imag() == 0.0 && z.real() < 0.0)
    throw BranchCutError("g21_12_eval: argument on the negative real axis");
  if (z == 0.0) return {pi, 0.0, 1, Method::MeijerG};

  try {
    const auto s = detail::meijer_residue_series(z, tol);
    const double roundoff = 4.0 * machine_eps * s.peak;
    if (roundoff <= meijer_series_rel_limit * std::abs(s.sum)) {
      complex v = pi * s.sum;
      if (z.imag() == 0.0) v.imag(0.0);
      return {v, pi * (s.last + roundoff), s.terms, Method::MeijerG};
    }
  } catch (const ConvergenceError&) {
  }
  auto out = detail::meijer_contour(z);
  if (z.imag() == 0.0) out.value.imag(0.0);
  return out;
}

// ---------------------------------------------------------------------------
// V(x) through the H, G and reduced forms
// ---------------------------------------------------------------------------

namespace detail {

inline complex z_of(double x, const LineParams& p) {
  return {2.0 * p.omega_l() / p.omega_g(), 2.0 * x / p.omega_g()};
}

inline void require_lorentz_width(const LineParams& p, const char* what) {
  if (!(p.omega_l() > 0.0)) throw DomainError(what);
}

template <class F>
EvalOutcome<double> conjugate_pair_form(double x, const LineParams& p, double prefactor, Method m,
                                        F&& term) {
  const complex z = z_of(x, p);
  const auto a = term(z);
  const auto b = term(std::conj(z));
  const double v = prefactor * real_of_conjugate_sum(a.value + b.value, std::abs(a.value));
  const double err = prefactor * (a.est_error + b.est_error) +
                     8.0 * machine_eps * prefactor * (std::abs(a.value) + std::abs(b.value));
  return {v, err, a.work + b.work, m, a.flags | b.flags};
}

inline EvalOutcome<complex> exact(complex v) {
  return {v, 4e-15 * std::abs(v), 1, Method::Series};
}

inline void guard_exponent_of(complex e, const char* what) {
  if (std::abs(e.real()) > 700.0) throw MethodDomainError(what);
}

}  // namespace detail

/// V(x) = 1/(2 pi omega_g) {H[Z | (1/2,1/2); (0,1)] + H[conj Z | ...]}.
inline EvalOutcome<double> voigt_fox_h(double x, const LineParams& p, const ContourSpec& spec) {
  detail::require_lorentz_width(p, "Fox H form needs omega_l > 0");
  const HParams h = h_params_ascending();
  return detail::conjugate_pair_form(x, p, 1.0 / (2.0 * pi * p.omega_g()), Method::FoxH,
                                     [&](complex z) { return h11_11_eval(z, h, spec); });
}

inline EvalOutcome<double> voigt_fox_h(double x, const LineParams& p) {
  return voigt_fox_h(x, p, h_default_contour(h_params_ascending()));
}

/// V(x) = 1/(2 pi omega_g) {H[1/Z | (1,1); (1/2,1/2)] + H[1/conj Z | ...]}.
inline EvalOutcome<double> voigt_fox_h_descending(double x, const LineParams& p,
                                                  const ContourSpec& spec) {
  detail::require_lorentz_width(p, "Fox H form needs omega_l > 0");
  const HParams h = h_params_descending();
  return detail::conjugate_pair_form(x, p, 1.0 / (2.0 * pi * p.omega_g()), Method::FoxH,
                                     [&](complex z) { return h11_11_eval(1.0 / z, h, spec); });
}

inline EvalOutcome<double> voigt_fox_h_descending(double x, const LineParams& p) {
  return voigt_fox_h_descending(x, p, h_default_contour(h_params_descending()));
}

/// V(x) = 1/(2 pi^(3/2) omega_g) {G[Z^2/4] + G[conj(Z)^2/4]}.
inline EvalOutcome<double> voigt_meijer_g(double x, const LineParams& p, const Tolerance& tol = {}) {
  detail::require_lorentz_width(p, "Meijer G form needs omega_l > 0");
  return detail::conjugate_pair_form(
      x, p, 1.0 / (2.0 * pi * sqrt_pi * p.omega_g()), Method::MeijerG,
      [&](complex z) { return g21_12_eval(0.25 * z * z, 0.5, 0.0, 0.5, tol); });
}

/// V(x) = 1/(2 pi omega_g) sum (Z/2)^(-1/2) exp(Z^2/8) W_{-1/4,-1/4}(Z^2/4).
inline EvalOutcome<double> voigt_whittaker(double x, const LineParams& p) {
  detail::require_lorentz_width(p, "Whittaker form needs omega_l > 0");
  return detail::conjugate_pair_form(x, p, 1.0 / (2.0 * pi * p.omega_g()), Method::Whittaker,
                                     [](complex z) {
                                       const complex u = 0.25 * z * z;
                                       detail::guard_exponent_of(u, "Whittaker form: exponent out of range");
                                       return detail::exact(std::pow(0.5 * z, -0.5) *
                                                            std::exp(0.5 * u) *
                                                            whittaker_w_quarter(u));
                                     });
}

/// V(x) = 1/(2 sqrt(pi) omega_g) sum exp(Z^2/4) erfc(Z/2).
inline EvalOutcome<double> voigt_erfc(double x, const LineParams& p) {
  detail::require_lorentz_width(p, "erfc form needs omega_l > 0");
  return detail::conjugate_pair_form(x, p, 1.0 / (2.0 * sqrt_pi * p.omega_g()), Method::Erfc,
                                     [](complex z) {
                                       const complex u = 0.25 * z * z;
                                       detail::guard_exponent_of(u, "erfc form: exponent out of range");
                                       return detail::exact(std::exp(u) * erfc_complex(0.5 * z));
                                     });
}

/// V(x) = 1/(sqrt(2) pi omega_g) sum exp(Z^2/8) D_{-1}(Z / sqrt 2).
inline EvalOutcome<double> voigt_parabolic(double x, const LineParams& p) {
  detail::require_lorentz_width(p, "D_{-1} form needs omega_l > 0");
  return detail::conjugate_pair_form(x, p, 1.0 / (std::sqrt(2.0) * pi * p.omega_g()),
                                     Method::ParabolicCylinder, [](complex z) {
                                       const complex e = 0.125 * z * z;
                                       detail::guard_exponent_of(e, "D_{-1} form: exponent out of range");
                                       return detail::exact(std::exp(e) *
                                                            parabolic_d_minus1(z / std::sqrt(2.0)));
                                     });
}

/// Evaluates V(x) through the G, Whittaker, erfc, D_{-1} and H forms and
/// reports their pairwise deviations in a single row.
inline MethodReport reduction_identities_check(double x, const LineParams& p) {
  detail::require_lorentz_width(p, "reduction identities need omega_l > 0");
  ReportRow row;
  row.x = x;
  row.values.push_back(record_method(Method::MeijerG, [&] { return voigt_meijer_g(x, p); }));
  row.values.push_back(record_method(Method::Whittaker, [&] { return voigt_whittaker(x, p); }));
  row.values.push_back(record_method(Method::Erfc, [&] { return voigt_erfc(x, p); }));
  row.values.push_back(
      record_method(Method::ParabolicCylinder, [&] { return voigt_parabolic(x, p); }));
  row.values.push_back(record_method(Method::FoxH, [&] { return voigt_fox_h(x, p); }));
  MethodReport report;
  report.add_row(std::move(row));
  return report;
}

}  // namespace voigt
