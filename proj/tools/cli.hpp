#pragma once

// voigt command line: table, crossval, figure1.
// Exit codes: 0 success, 2 usage or validation error, 3 numerical failure.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "voigt/voigt.hpp"

namespace voigt::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 2;
inline constexpr int exit_numerical = 3;

inline constexpr double figure1_ratios[] = {0.01, 0.1, 1.0, 2.0};

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

/// Comma-separated method names; "fast" and "all" expand to method groups.
inline std::vector<Method> parse_methods(const std::string& list) {
  std::vector<Method> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (item == "fast") {
      out.insert(out.end(), std::begin(fast_methods), std::end(fast_methods));
    } else if (item == "all") {
      out.insert(out.end(), std::begin(voigt_methods), std::end(voigt_methods));
    } else {
      out.push_back(parse_method(item));
    }
  }
  return out;
}

/// Tolerance with max_work taken from VOIGT_MAX_WORK when set.
inline Tolerance tolerance_from_env() {
  Tolerance tol;
  if (const char* env = std::getenv("VOIGT_MAX_WORK")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 8 || v > 100'000'000)
      throw UsageError("VOIGT_MAX_WORK must be an integer in [8, 1e8]");
    tol.max_work = int(v);
  }
  return tol;
}

inline json request_json(const GridRequest& req) {
  json methods = json::array();
  for (Method m : req.methods) methods.push_back(std::string(method_name(m)));
  return {{"x_min", req.x_min},
          {"x_max", req.x_max},
          {"steps", req.steps},
          {"omega_g", req.params.omega_g()},
          {"omega_l", req.params.omega_l()},
          {"methods", methods},
          {"tol", {{"rel", req.tol.rel}, {"abs", req.tol.abs}, {"max_work", req.tol.max_work}}}};
}

inline std::optional<double> lorentzian_or_none(double x, const LineParams& p) {
  if (p.omega_l() == 0.0) return std::nullopt;
  return lorentzian(x, p);
}

struct TableRow {
  double x, voigt, gaussian, est_error;
  std::optional<double> lorentzian;
};

inline std::vector<TableRow> table_rows(const GridRequest& req) {
  req.validate();
  if (req.methods.size() != 1) throw UsageError("table takes exactly one method");
  const Method m = req.methods.front();
  std::vector<TableRow> rows;
  rows.reserve(std::size_t(req.steps));
  for (long i = 0; i < req.steps; ++i) {
    const double x = req.x(i);
    EvalOutcome<double> v;
    try {
      v = evaluate_voigt(x, req.params, m, req.tol);
    } catch (const Error& e) {
      throw NumericalFailure("x = " + fmt17(x) + ": " + e.what());
    }
    if (!(v.value > 0.0)) throw NumericalFailure("x = " + fmt17(x) + ": non-positive V");
    rows.push_back({x, v.value, gaussian(x, req.params), v.est_error,
                    lorentzian_or_none(x, req.params)});
  }
  return rows;
}

/// CSV columns: x,voigt,gaussian,lorentzian,method,est_error. The
/// Lorentzian column is empty when omega_l = 0.
inline void write_table_csv(const GridRequest& req, const std::vector<TableRow>& rows,
                            std::ostream& out) {
  const std::string name(method_name(req.methods.front()));
  out << "x,voigt,gaussian,lorentzian,method,est_error\n";
  for (const auto& r : rows)
    out << fmt17(r.x) << ',' << fmt17(r.voigt) << ',' << fmt17(r.gaussian) << ','
        << (r.lorentzian ? fmt17(*r.lorentzian) : "") << ',' << name << ','
        << fmt17(r.est_error) << '\n';
}

inline void write_table_json(const GridRequest& req, const std::vector<TableRow>& rows,
                             std::ostream& out) {
  const std::string name(method_name(req.methods.front()));
  json jr = json::array();
  double max_err = 0.0;
  for (const auto& r : rows) {
    jr.push_back({{"x", r.x},
                  {"voigt", r.voigt},
                  {"gaussian", r.gaussian},
                  {"lorentzian", r.lorentzian ? json(*r.lorentzian) : json(nullptr)},
                  {"method", name},
                  {"est_error", r.est_error}});
    max_err = std::max(max_err, r.est_error);
  }
  const json doc = {{"request", request_json(req)},
                    {"rows", jr},
                    {"summary", {{"rows", rows.size()}, {"max_est_error", max_err}}}};
  out << doc.dump(2) << '\n';
}

inline json report_json(const GridRequest& req, const MethodReport& rep, double threshold) {
  json rows = json::array();
  for (const auto& r : rep.rows) {
    json values = json::object();
    for (const auto& v : r.values) {
      json jv = {{"status", std::string(status_name(v.status))}};
      if (v.status == MethodStatus::Ok) {
        jv["value"] = v.value;
        jv["est_error"] = v.est_error;
        jv["work"] = v.work;
        jv["flags"] = v.flags;
      } else {
        jv["message"] = v.message;
      }
      values[std::string(method_name(v.method))] = jv;
    }
    json row = {{"x", r.x}, {"values", values}, {"max_deviation", r.max_deviation}};
    if (const auto* w = r.worst_pair())
      row["worst_pair"] = {std::string(method_name(w->first)), std::string(method_name(w->second))};
    else
      row["worst_pair"] = nullptr;
    rows.push_back(row);
  }
  const auto& s = rep.summary;
  json summary = {{"worst", s.worst}};
  summary["worst_pair"] =
      s.worst_pair ? json::array({std::string(method_name(s.worst_pair->first)),
                                  std::string(method_name(s.worst_pair->second))})
                   : json(nullptr);
  summary["worst_x"] = s.worst_x;
  summary["total_work"] = s.total_work;
  summary["refusals"] = s.refusals;
  summary["failures"] = s.failures;
  summary["threshold"] = threshold;
  summary["passed"] = s.failures == 0 && s.worst <= threshold;
  json request = request_json(req);
  request["threshold"] = threshold;
  return {{"request", request}, {"rows", rows}, {"summary", summary}};
}

/// Writes figure1_a{0.01,0.1,1,2}.csv: omega_g = 1, x in [-5, 5], 201 points.
inline void write_figure1(const std::filesystem::path& dir, Method method, const Tolerance& tol) {
  std::filesystem::create_directories(dir);
  for (double a : figure1_ratios) {
    GridRequest req{-5.0, 5.0, 201, LineParams::from_ratio(1.0, a), {method}, tol};
    const auto rows = table_rows(req);
    char name[64];
    std::snprintf(name, sizeof name, "figure1_a%g.csv", a);
    std::ofstream f(dir / name, std::ios::binary);
    if (!f) throw NumericalFailure(std::string("cannot write ") + (dir / name).string());
    write_table_csv(req, rows, f);
  }
}

struct GridFlags {
  double omega_g = 1.0;
  double omega_l = 1.0;
  double x_min = -5.0;
  double x_max = 5.0;
  long steps = 201;
};

inline void add_grid_flags(CLI::App* cmd, GridFlags& g) {
  cmd->add_option("--omega-g", g.omega_g, "Gaussian width")->capture_default_str();
  cmd->add_option("--omega-l", g.omega_l, "Lorentzian width")->capture_default_str();
  cmd->add_option("--x-min", g.x_min, "first abscissa")->capture_default_str();
  cmd->add_option("--x-max", g.x_max, "last abscissa")->capture_default_str();
  cmd->add_option("--steps", g.steps, "grid points, endpoints included")->capture_default_str();
}

inline GridRequest make_request(const GridFlags& g, std::vector<Method> methods) {
  GridRequest req{g.x_min, g.x_max, g.steps, LineParams(g.omega_g, g.omega_l), std::move(methods),
                  tolerance_from_env()};
  req.validate();
  return req;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Voigt profile evaluation and cross-validation", "voigt"};
  app.require_subcommand(1);

  GridFlags tflags;
  std::string t_method = "faddeeva";
  std::string t_format = "csv";
  auto* table = app.add_subcommand("table", "tabulate V(x), G(x) and L(x) on a grid");
  add_grid_flags(table, tflags);
  table->add_option("--method", t_method, "Voigt evaluator")->capture_default_str();
  table->add_option("--format", t_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  GridFlags cflags;
  std::string c_methods = "fast";
  double threshold = 1e-8;
  auto* crossval = app.add_subcommand("crossval", "compare several evaluators on a grid");
  add_grid_flags(crossval, cflags);
  crossval->add_option("--methods", c_methods, "comma-separated methods, or fast / all")
      ->capture_default_str();
  crossval->add_option("--threshold", threshold, "largest accepted relative deviation")
      ->capture_default_str();

  std::string out_dir = ".";
  std::string f_method = "faddeeva";
  auto* figure1 = app.add_subcommand("figure1", "write the four comparison tables");
  figure1->add_option("--out", out_dir, "output directory")->capture_default_str();
  figure1->add_option("--method", f_method, "Voigt evaluator")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "voigt: " << e.what() << '\n';
    return exit_usage;
  }

  try {
    if (*table) {
      const auto req = make_request(tflags, {parse_method(t_method)});
      const auto rows = table_rows(req);
      if (t_format == "csv")
        write_table_csv(req, rows, out);
      else
        write_table_json(req, rows, out);
      return exit_ok;
    }
    if (*crossval) {
      const auto methods = parse_methods(c_methods);
      if (methods.size() < 2) throw UsageError("crossval needs at least two methods");
      if (!(threshold > 0.0)) throw UsageError("--threshold must be > 0");
      const auto req = make_request(cflags, methods);
      const auto rep = cross_validate(req);
      out << report_json(req, rep, threshold).dump(2) << '\n';
      if (rep.summary.failures > 0) {
        err << "voigt: " << rep.summary.failures << " evaluation(s) failed inside their domain\n";
        return exit_numerical;
      }
      if (!(rep.summary.worst <= threshold)) {
        err << "voigt: worst deviation " << fmt17(rep.summary.worst) << " exceeds threshold\n";
        return exit_numerical;
      }
      return exit_ok;
    }
    if (*figure1) {
      write_figure1(out_dir, parse_method(f_method), tolerance_from_env());
      return exit_ok;
    }
  } catch (const UsageError& e) {
    err << "voigt: " << e.what() << '\n';
    return exit_usage;
  } catch (const InvalidArgument& e) {
    err << "voigt: " << e.what() << '\n';
    return exit_usage;
  } catch (const NumericalFailure& e) {
    err << "voigt: " << e.what() << '\n';
    return exit_numerical;
  } catch (const Error& e) {
    err << "voigt: " << e.what() << '\n';
    return exit_numerical;
  }
  return exit_usage;
}

}  // namespace voigt::cli
