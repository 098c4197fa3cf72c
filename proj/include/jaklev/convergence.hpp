#pragma once

// Uniform-convergence experiment: sup over an x-grid on [0, A] of
// |L_n* f - f| per (f, n), with the empirical order as the log-log slope
// of the sup error against n.

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "jaklev/operators.hpp"
#include "jaklev/regression.hpp"

namespace jaklev {

struct ConvergenceRow {
  std::string label;
  long n = 0;
  double sup_error = 0.0;
};

struct ConvergenceReport {
  std::vector<ConvergenceRow> rows;  // n-major per function, deterministic order
  std::vector<std::pair<std::string, std::optional<double>>> slopes;
};

/// sup_{x in grid} |L_n* f - f| on [0, A] with `points` grid nodes.
inline double sup_error_on_grid(const OperatorConfig& cfg, const TestFunction& f, double A,
                                long points) {
  if (!(A > 0.0) || points < 2) throw Error("sup_error_on_grid: need A > 0 and points >= 2");
  double best = 0.0;
  for (long i = 0; i < points; ++i) {
    const double x = A * static_cast<double>(i) / static_cast<double>(points - 1);
    best = std::max(best, std::fabs(eval_L_star(cfg, f, x) - f(x)));
  }
  return best;
}

inline ConvergenceReport run_convergence(const OperatorConfig& base,
                                         const std::vector<long>& n_list,
                                         const std::vector<TestFunction>& suite, double A,
                                         long points) {
  ConvergenceReport report;
  for (const TestFunction& f : suite) {
    std::vector<std::pair<double, double>> samples;
    for (long n : n_list) {
      const double err = sup_error_on_grid(base.with_n(n), f, A, points);
      report.rows.push_back({f.label(), n, err});
      samples.emplace_back(static_cast<double>(n), err);
    }
    report.slopes.emplace_back(f.label(), loglog_slope(samples));
  }
  return report;
}

}  // namespace jaklev
