#pragma once

// One entry point for every representation of V(x), and grid cross-validation.

#include <cmath>
#include <vector>

#include "voigt/cerf.hpp"
#include "voigt/core.hpp"
#include "voigt/foxh_meijer.hpp"
#include "voigt/mellin_barnes.hpp"
#include "voigt/method_report.hpp"
#include "voigt/oracle.hpp"

namespace voigt {

/// Relative error estimates above which the series evaluators decline a point.
/// The ascending estimate is a worst-case rounding bound, so its limit is looser.
inline constexpr double ascending_domain_rel = 1e-9;
inline constexpr double asymptotic_domain_rel = 1e-10;

/// Representations cheap enough for dense grids.
inline constexpr Method fast_methods[] = {
    Method::Faddeeva,    Method::Dawson,       Method::Hyp1F1,      Method::DiRocco,
    Method::Whittaker,   Method::Erfc,         Method::ParabolicCylinder,
    Method::MBAscending, Method::MBAsymptotic, Method::MeijerG};

/// V(x) by the requested method. Points outside a method's domain raise
/// MethodDomainError; failures inside it raise the method's own error.
inline EvalOutcome<double> evaluate_voigt(double x, const LineParams& p, Method method,
                                          const Tolerance& tol = {}) {
  tol.validate();
  if (!std::isfinite(x)) throw InvalidArgument("evaluate_voigt: x must be finite");
  const double wg = p.omega_g();
  try {
    switch (method) {
      case Method::Convolution:
        if (p.omega_l() == 0.0) throw MethodDomainError("convolution oracle needs omega_l > 0");
        return voigt_convolution(x, p);
      case Method::Reiche: return voigt_reiche(x, p);
      case Method::Zaghloul: return voigt_zaghloul(x, p);
      case Method::Faddeeva:
      case Method::Dawson:
      case Method::Hyp1F1:
      case Method::DiRocco:
      case Method::Whittaker:
      case Method::Erfc:
      case Method::ParabolicCylinder: {
        auto k = k_voigt(DimensionlessPoint::from(x, p), method, tol);
        const double scale = inv_sqrt_pi / wg;
        return {k.value * scale, k.est_error * scale, k.work, method, k.flags};
      }
      case Method::MBContour: return mb_contour_eval(x, p, MBForm::DescendingKernel);
      case Method::MBContourMirrored: return mb_contour_eval(x, p, MBForm::AscendingKernel);
      case Method::MBPair: return mb_conjugate_pair_eval(x, p, MBForm::DescendingKernel);
      case Method::MBAscending:
        if (PolarCoords::from(x, p).rho > ascending_series_max_rho)
          throw MethodDomainError("ascending series: rho beyond the cancellation-safe radius");
      {
        auto out = mb_ascending_series(x, p, tol);
        if (!(out.est_error <= ascending_domain_rel * std::abs(out.value)))
          throw MethodDomainError("ascending series: cancellation error above 1e-9 relative");
        return out;
      }
      case Method::MBAsymptotic: {
        auto out = mb_asymptotic_series(x, p, tol.max_work);
        if (!(out.est_error <= asymptotic_domain_rel * std::abs(out.value)))
          throw MethodDomainError("asymptotic series: truncation error above 1e-10 relative");
        return out;
      }
      case Method::FoxH: return voigt_fox_h(x, p);
      case Method::MeijerG: return voigt_meijer_g(x, p, tol);
      case Method::Series:
      case Method::Quadrature: break;
    }
  } catch (const DomainError& e) {
    throw MethodDomainError(e.what());
  } catch (const DegenerateWidthError& e) {
    throw MethodDomainError(e.what());
  } catch (const OverflowGuardError& e) {
    throw MethodDomainError(e.what());
  }
  throw InvalidArgument("evaluate_voigt: '" + std::string(method_name(method)) +
                        "' is not a Voigt evaluator");
}

struct GridRequest {
  double x_min = -5.0;
  double x_max = 5.0;
  long steps = 201;
  LineParams params{1.0, 1.0};
  std::vector<Method> methods;
  Tolerance tol;

  static constexpr long max_steps = 10'000'000;

  void validate() const {
    if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_min < x_max))
      throw InvalidArgument("grid needs finite x_min < x_max");
    if (steps < 2 || steps > max_steps) throw InvalidArgument("grid steps must be in [2, 1e7]");
    tol.validate();
  }

  /// Grid abscissa i of steps, endpoints exact.
  double x(long i) const {
    if (i == steps - 1) return x_max;
    return x_min + (x_max - x_min) * double(i) / double(steps - 1);
  }
};

/// Evaluates every requested method at every grid point.
inline MethodReport cross_validate(const GridRequest& req) {
  req.validate();
  if (req.methods.size() < 2) throw InvalidArgument("cross-validation needs at least two methods");
  MethodReport report;
  report.rows.reserve(std::size_t(req.steps));
  for (long i = 0; i < req.steps; ++i) {
    ReportRow row;
    row.x = req.x(i);
    for (Method m : req.methods)
      row.values.push_back(
          record_method(m, [&] { return evaluate_voigt(row.x, req.params, m, req.tol); }));
    report.add_row(std::move(row));
  }
  return report;
}

}  // namespace voigt
