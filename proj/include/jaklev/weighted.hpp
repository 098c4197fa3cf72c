#pragma once

// Weighted-space machinery for rho(x) = 1 + x^2.
//
// ||f||_rho = sup |f(x)|/rho(x) over [0, inf) is estimated as a grid sup
// on [0, X_max] plus an analytic tail bound.  Presets supply their own
// |f|/rho tails; for operator images the tails come from the validated
// closed moments:
//
//   L_n* rho - rho = L_n* e_2 - e_2 = A x h + B h^2,
//   A = 2 (1 + g'/g),  B = g''/g + 2 g'/g + 1/3,  h = b_n/n,
//
// whose rho-normalized sup beyond any cutoff is in closed form, and for
// general C^2 presets from the Taylor bound
//
//   |L_n* f - f|(x) <= |f'|_env(x) |mu1| + ||f''|| mu2(x) / 2
//
// with a linear envelope |f'|_env(x) = p + q x, again linear over rho.

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "jaklev/errors.hpp"
#include "jaklev/moments.hpp"
#include "jaklev/operators.hpp"
#include "jaklev/regression.hpp"
#include "jaklev/test_function.hpp"

namespace jaklev {

struct WeightedNormEstimate {
  double value = 0.0;
  double argmax_x = 0.0;   // grid argmax (the tail may dominate `value`)
  double domain_cap = 0.0; // X_max
  double tail_bound = 0.0; // analytic bound on the sup beyond X_max
};

/// ||f||_rho estimate: grid sup on [0, X_max] plus the preset's tail bound.
/// Throws TailUnboundedError when the growth class exceeds rho.
inline WeightedNormEstimate weighted_norm(const TestFunction& f, double X_max, long grid_n) {
  if (!(X_max > 0.0) || grid_n < 1) throw Error("weighted_norm: need X_max > 0, grid_n >= 1");
  const auto tail = f.rho_tail_bound(X_max);
  if (!tail) {
    throw TailUnboundedError("weighted_norm: growth of " + f.label() + " exceeds rho = 1+x^2");
  }
  WeightedNormEstimate est;
  est.domain_cap = X_max;
  est.tail_bound = *tail;
  for (long i = 0; i <= grid_n; ++i) {
    const double x = X_max * static_cast<double>(i) / static_cast<double>(grid_n);
    const double v = std::fabs(f(x)) / (1.0 + x * x);
    if (v > est.value) {
      est.value = v;
      est.argmax_x = x;
    }
  }
  est.value = std::max(est.value, est.tail_bound);
  return est;
}

namespace detail {

// Closed-form coefficients of L_n* e_2 - e_2 = A x h + B h^2.
inline std::pair<double, double> e2_excess_coeffs(const OperatorConfig& cfg) {
  const double mg = cfg.gf.mean_shift();
  const double g2 = cfg.gf.g1pp() / cfg.gf.g1();
  return {2.0 * (1.0 + mg), g2 + 2.0 * mg + 1.0 / 3.0};
}

// Grid sup on [0, X_max] of |L* f - f| / rho with `eval` the operator image.
template <typename Eval>
double measured_rho_sup(Eval&& eval, const TestFunction& f, double X_max, long grid_n) {
  double best = 0.0;
  for (long i = 0; i <= grid_n; ++i) {
    const double x = X_max * static_cast<double>(i) / static_cast<double>(grid_n);
    best = std::max(best, std::fabs(eval(x) - f(x)) / (1.0 + x * x));
  }
  return best;
}

}  // namespace detail

struct Lemma3Result {
  std::vector<long> n_values;
  std::vector<double> norms;  // ||L_n* rho||_rho per n
  double sup_value = 0.0;
  bool bounded = false;
};

/// Lemma 3 witness: ||L_n*(rho; .)||_rho across the n-sweep.  Declares the
/// family bounded when every value is finite, >= 1 up to rounding, and the
/// sequence is nonincreasing toward 1 across the sweep.
inline Lemma3Result lemma3_check(const OperatorConfig& base, const std::vector<long>& n_list,
                                 double X_max = 50.0, long grid_n = 200) {
  const TestFunction rho = TestFunction::poly({1.0, 0.0, 1.0});
  Lemma3Result result;
  for (long n : n_list) {
    const OperatorConfig cfg = base.with_n(n);
    const auto [A, B] = detail::e2_excess_coeffs(cfg);
    const double h = cfg.cell_width();
    double grid_sup = 0.0;
    for (long i = 0; i <= grid_n; ++i) {
      const double x = X_max * static_cast<double>(i) / static_cast<double>(grid_n);
      grid_sup = std::max(grid_sup, eval_L_star(cfg, rho, x) / (1.0 + x * x));
    }
    // beyond X_max: L* rho / rho = 1 + (A x h + B h^2)/rho, closed form
    const double tail = 1.0 + detail::sup_linear_over_rho(A * h, B * h * h, X_max);
    result.n_values.push_back(n);
    result.norms.push_back(std::max(grid_sup, tail));
  }
  bool ok = !result.norms.empty();
  for (std::size_t i = 0; i < result.norms.size(); ++i) {
    const double v = result.norms[i];
    if (!std::isfinite(v) || v < 1.0 - 1e-9) ok = false;
    if (i > 0 && v > result.norms[i - 1] + 1e-9) ok = false;
    result.sup_value = std::max(result.sup_value, v);
  }
  result.bounded = ok;
  return result;
}

struct WeightedRow {
  long n = 0;
  std::string label;
  double weighted_error = 0.0;
};

struct Theorem7Table {
  std::vector<WeightedRow> rows;
  std::vector<std::pair<std::string, std::optional<double>>> slopes;  // per label
};

/// Theorem 6 hypotheses ||L_n* e_v - e_v||_rho (v = 0, 1, 2) and the
/// Theorem 7 conclusion ||L_n* f - f||_rho across the n-sweep, each as
/// grid sup plus analytic tail.  f must be a C^2 preset inside C_rho^k.
inline Theorem7Table theorem7_experiment(const OperatorConfig& base,
                                         const std::vector<long>& n_list, const TestFunction& f,
                                         double X_max = 50.0, long grid_n = 200) {
  if (!f.in_c_rho_k()) {
    throw NotInCRhoKError("theorem7_experiment: " + f.label() + " is not in C_rho^k");
  }
  const auto envelope = f.taylor_envelope();
  if (!envelope) {
    throw NotInCRhoKError("theorem7_experiment: no C^2 tail envelope for " + f.label());
  }

  Theorem7Table table;
  const TestFunction e[3] = {TestFunction::monomial(0), TestFunction::monomial(1),
                             TestFunction::monomial(2)};
  std::vector<std::vector<std::pair<double, double>>> samples(4);

  for (long n : n_list) {
    const OperatorConfig cfg = base.with_n(n);
    const double h = cfg.cell_width();
    const double mu1 = std::fabs(moment_closed_form(cfg, 1, 0.0));  // (g'/g + 1/2) h
    const auto [A, B] = detail::e2_excess_coeffs(cfg);

    for (int v = 0; v <= 2; ++v) {
      const double grid_sup = detail::measured_rho_sup(
          [&](double x) { return eval_L_star(cfg, e[v], x); }, e[v], X_max, grid_n);
      double tail = 0.0;
      if (v == 1) tail = mu1 / (1.0 + X_max * X_max);
      if (v == 2) tail = detail::sup_linear_over_rho(A * h, B * h * h, X_max);
      const double value = std::max(grid_sup, tail);
      table.rows.push_back({n, "e" + std::to_string(v), value});
      samples[static_cast<std::size_t>(v)].emplace_back(static_cast<double>(n), value);
    }

    const double grid_sup = detail::measured_rho_sup(
        [&](double x) { return eval_L_star(cfg, f, x); }, f, X_max, grid_n);
    const double a = envelope->q * mu1 + 0.5 * envelope->f2_sup * h;
    const double b = envelope->p * mu1 + 0.5 * envelope->f2_sup * B * h * h;
    const double tail = detail::sup_linear_over_rho(a, b, X_max);
    const double value = std::max(grid_sup, tail);
    table.rows.push_back({n, f.label(), value});
    samples[3].emplace_back(static_cast<double>(n), value);
  }

  table.slopes = {{"e0", loglog_slope(samples[0])},
                  {"e1", loglog_slope(samples[1])},
                  {"e2", loglog_slope(samples[2])},
                  {f.label(), loglog_slope(samples[3])}};
  return table;
}

}  // namespace jaklev
