#pragma once

// Cross-method comparison records: one row per grid point, with the value,
// error estimate and status of every requested method and the worst
// pairwise relative deviation among the methods that produced a value.

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "voigt/core.hpp"

namespace voigt {

enum class MethodStatus {
  Ok,
  /// The point lies outside the method's declared domain.
  Refused,
  /// The method failed inside its domain.
  Failed,
};

constexpr std::string_view status_name(MethodStatus s) {
  switch (s) {
    case MethodStatus::Ok: return "ok";
    case MethodStatus::Refused: return "refused";
    case MethodStatus::Failed: return "failed";
  }
  return "unknown";
}

struct MethodValue {
  Method method = Method::Series;
  MethodStatus status = MethodStatus::Ok;
  double value = 0.0;
  double est_error = 0.0;
  long work = 0;
  std::uint32_t flags = flag_none;
  std::string message;
};

struct PairDeviation {
  Method first;
  Method second;
  double deviation;
};

/// |a - b| / max(|a|, |b|), or |a - b| when both vanish.
inline double relative_deviation(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale > 0.0 ? std::abs(a - b) / scale : std::abs(a - b);
}

struct ReportRow {
  double x = 0.0;
  std::vector<MethodValue> values;
  std::vector<PairDeviation> pairs;
  double max_deviation = 0.0;

  /// Fills pairs and max_deviation from values.
  void compare() {
    pairs.clear();
    max_deviation = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i)
      for (std::size_t j = i + 1; j < values.size(); ++j) {
        const auto& a = values[i];
        const auto& b = values[j];
        if (a.status != MethodStatus::Ok || b.status != MethodStatus::Ok) continue;
        const double d = relative_deviation(a.value, b.value);
        pairs.push_back({a.method, b.method, d});
        max_deviation = std::max(max_deviation, d);
      }
  }

  const PairDeviation* worst_pair() const {
    const PairDeviation* w = nullptr;
    for (const auto& pd : pairs)
      if (!w || pd.deviation > w->deviation) w = &pd;
    return w;
  }

  const MethodValue* find(Method m) const {
    for (const auto& v : values)
      if (v.method == m) return &v;
    return nullptr;
  }
};

struct ReportSummary {
  double worst = 0.0;
  std::optional<std::pair<Method, Method>> worst_pair;
  double worst_x = 0.0;
  long total_work = 0;
  int refusals = 0;
  int failures = 0;
};

struct MethodReport {
  std::vector<ReportRow> rows;
  ReportSummary summary;

  void add_row(ReportRow row) {
    row.compare();
    for (const auto& v : row.values) {
      summary.total_work += v.work;
      if (v.status == MethodStatus::Refused) ++summary.refusals;
      if (v.status == MethodStatus::Failed) ++summary.failures;
    }
    if (const auto* w = row.worst_pair(); w && (!summary.worst_pair || w->deviation > summary.worst)) {
      summary.worst = w->deviation;
      summary.worst_pair = std::make_pair(w->first, w->second);
      summary.worst_x = row.x;
    }
    rows.push_back(std::move(row));
  }
};

/// Runs eval() and records the outcome, sorting exceptions into refusals
/// (MethodDomainError, DomainError) and failures (every other Error).
template <class F>
MethodValue record_method(Method m, F&& eval) {
  MethodValue mv;
  mv.method = m;
  try {
    const auto out = eval();
    mv.value = out.value;
    mv.est_error = out.est_error;
    mv.work = out.work;
    mv.flags = out.flags;
  } catch (const MethodDomainError& e) {
    mv.status = MethodStatus::Refused;
    mv.message = e.what();
  } catch (const DomainError& e) {
    mv.status = MethodStatus::Refused;
    mv.message = e.what();
  } catch (const Error& e) {
    mv.status = MethodStatus::Failed;
    mv.message = e.what();
  }
  return mv;
}

}  // namespace voigt
