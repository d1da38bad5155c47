#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <span>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "voigt/core.hpp"

namespace voigt::detail {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  long evaluations = 0;
};

struct PanelEstimate {
  double value, error, l1;
};

/// One G10/K21 panel with the QUADPACK error estimate, which scales with the
/// panel instead of flooring at an absolute round-off level.
template <class F>
PanelEstimate gauss_kronrod_21(F& f, double a, double b) {
  const auto& xk = boost::math::quadrature::gauss_kronrod<double, 21>::abscissa();
  const auto& wk = boost::math::quadrature::gauss_kronrod<double, 21>::weights();
  const auto& wg = boost::math::quadrature::gauss<double, 10>::weights();
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  std::array<double, 21> fv;
  fv[0] = f(centre);
  for (std::size_t i = 1; i < xk.size(); ++i) {
    fv[2 * i - 1] = f(centre - half * xk[i]);
    fv[2 * i] = f(centre + half * xk[i]);
  }
  double kronrod = wk[0] * fv[0];
  double gauss = 0.0;
  double abs_sum = wk[0] * std::abs(fv[0]);
  for (std::size_t i = 1; i < xk.size(); ++i) {
    const double pair = fv[2 * i - 1] + fv[2 * i];
    kronrod += wk[i] * pair;
    abs_sum += wk[i] * (std::abs(fv[2 * i - 1]) + std::abs(fv[2 * i]));
    if (i % 2 == 1) gauss += wg[i / 2] * pair;
  }
  const double mean = 0.5 * kronrod;
  double asc = wk[0] * std::abs(fv[0] - mean);
  for (std::size_t i = 1; i < xk.size(); ++i)
    asc += wk[i] * (std::abs(fv[2 * i - 1] - mean) + std::abs(fv[2 * i] - mean));

  const double h = std::abs(half);
  double err = std::abs((kronrod - gauss) * half);
  const double resasc = asc * h;
  const double resabs = abs_sum * h;
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  const double floor = 50.0 * machine_eps * resabs;
  if (resabs > std::numeric_limits<double>::min() / (50.0 * machine_eps)) err = std::max(floor, err);
  return {kronrod * half, err, resabs};
}

/// Globally adaptive Gauss-Kronrod (G10/K21) over consecutive panels
/// [breaks[0], breaks[1]], ..., always bisecting the panel with the largest
/// error estimate. Stops when the summed error is below
/// max(abs_tol, rel_tol * |value|, round-off floor), the floor being a few
/// ulps of the integral of |f|; throws ConvergenceError if max_subdivisions
/// bisections do not get there.
template <class F>
QuadratureResult adaptive_gauss_kronrod(F&& f, std::span<const double> breaks, double abs_tol,
                                        double rel_tol, int max_subdivisions) {
  struct Panel {
    double a, b, value, error, l1;
    bool operator<(const Panel& o) const { return error < o.error; }
  };

  long evaluations = 0;
  auto counted = [&](double t) {
    ++evaluations;
    return f(t);
  };
  auto apply = [&](double a, double b) {
    const auto r = gauss_kronrod_21(counted, a, b);
    return Panel{a, b, r.value, r.error, r.l1};
  };

  std::priority_queue<Panel> heap;
  double total = 0.0;
  double total_err = 0.0;
  double total_l1 = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (!(breaks[i + 1] > breaks[i])) continue;
    Panel p = apply(breaks[i], breaks[i + 1]);
    total += p.value;
    total_err += p.error;
    total_l1 += p.l1;
    heap.push(p);
  }

  int splits = 0;
  auto target = [&] {
    return std::max({abs_tol, rel_tol * std::abs(total), 128.0 * machine_eps * total_l1});
  };
  while (total_err > target()) {
    if (splits >= max_subdivisions || heap.empty())
      throw ConvergenceError("adaptive quadrature: subdivision budget exhausted");
    const Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b))
      throw ConvergenceError("adaptive quadrature: panel width reached round-off");
    const Panel left = apply(worst.a, mid);
    const Panel right = apply(mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    total_l1 += left.l1 + right.l1 - worst.l1;
    heap.push(left);
    heap.push(right);
    ++splits;
  }

  // Re-sum to shed the drift of the running updates.
  total = 0.0;
  total_err = 0.0;
  while (!heap.empty()) {
    total += heap.top().value;
    total_err += heap.top().error;
    heap.pop();
  }
  return {total, total_err, evaluations};
}

}  // namespace voigt::detail
