#pragma once

// The two operators under study.
//
//   P_n(f; x)  = sum_k w_k(n x) f(k/n)
//   L_n*(f; x) = (n/b_n) sum_k w_k(n x / b_n) * integral of f over
//                [k b_n/n, (k+1) b_n/n]
//
// with w_k the normalized Appell kernel from weights.hpp.  L_n* replaces
// point evaluations by cell averages over cells of width b_n/n, so it is
// defined for merely integrable f.  All series are truncated by the weight
// table's epsilon-mass rule; the truncation error is bounded by
// tail_mass * majorant(f) over the retained range, and growth beyond the
// representable range raises GrowthOverflowError instead of returning Inf.
//
// Everything here is pure and deterministic: sums run in ascending k with
// extended-precision accumulators.

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>

#include "jaklev/appell.hpp"
#include "jaklev/errors.hpp"
#include "jaklev/quadrature.hpp"
#include "jaklev/scale.hpp"
#include "jaklev/test_function.hpp"
#include "jaklev/weights.hpp"

namespace jaklev {

struct OperatorConfig {
  GeneratingFunction gf;
  long n = 1;
  ScaleSequence scale = ScaleSequence::power(0.5);
  double epsilon = 1e-12;           // weight-tail tolerance
  int quad_order = 8;               // Gauss-Legendre points per cell
  bool allow_invalid_scale = false; // explicit override for fixed-n studies

  OperatorConfig(GeneratingFunction g, long n_, ScaleSequence s, double eps = 1e-12,
                 int quad = 8)
      : gf(std::move(g)), n(n_), scale(s), epsilon(eps), quad_order(quad) {
    if (n < 1) throw Error("operator config: n must be >= 1");
    if (!(epsilon > 0.0) || !(epsilon < 1.0)) {
      throw InvalidEpsilonError("operator config: epsilon must be in (0, 1)");
    }
    if (quad_order < 2) throw Error("operator config: quad_order must be >= 2");
  }

  double b_n() const { return scale(n); }
  double cell_width() const { return b_n() / static_cast<double>(n); }

  OperatorConfig with_n(long n_) const {
    OperatorConfig c = *this;
    c.n = n_;
    return c;
  }
  OperatorConfig with_epsilon(double eps) const {
    OperatorConfig c = *this;
    c.epsilon = eps;
    return c;
  }
};

namespace detail {

inline void check_growth(const TestFunction& f, double t_max) {
  const double maj = f.majorant(t_max);
  if (!std::isfinite(maj)) {
    throw GrowthOverflowError("majorant of " + f.label() + " overflows at t = " +
                              fmt_double(t_max));
  }
}

}  // namespace detail

/// P_n(f; x): kernel-weighted samples of f at k/n.
inline double eval_P(const OperatorConfig& cfg, const TestFunction& f, double x) {
  if (!(x >= 0.0) || !std::isfinite(x)) throw Error("eval_P: x must be finite and >= 0");
  const double y = static_cast<double>(cfg.n) * x;
  const WeightTable table = weight_table(cfg.gf, y, cfg.epsilon);
  detail::check_growth(f, static_cast<double>(table.weights.size()) / static_cast<double>(cfg.n));

  long double acc = 0.0L;
  for (std::size_t k = 0; k < table.weights.size(); ++k) {
    const double t = static_cast<double>(k) / static_cast<double>(cfg.n);
    const double v = f(t);
    if (!std::isfinite(v)) throw NonFiniteSampleError("f not finite at t = " + fmt_double(t));
    acc += static_cast<long double>(table.weights[k]) * static_cast<long double>(v);
  }
  const double result = static_cast<double>(acc);
  if (!std::isfinite(result)) throw GrowthOverflowError("P_n sum overflowed");
  return result;
}

/// L_n*(f; x): kernel-weighted cell averages of f.
inline double eval_L_star(const OperatorConfig& cfg, const TestFunction& f, double x) {
  if (!(x >= 0.0) || !std::isfinite(x)) throw Error("eval_L_star: x must be finite and >= 0");
  if (!cfg.allow_invalid_scale) {
    const ScaleVerdict verdict = scale_validate(cfg.scale);
    if (!verdict.valid) {
      std::string why = cfg.scale.description();
      for (const auto& r : verdict.reasons) why += "; " + r;
      throw InvalidScaleError("eval_L_star: invalid scale (" + why + ")");
    }
  }
  const double h = cfg.cell_width();
  if (!(h > 0.0) || !std::isfinite(h)) throw InvalidScaleError("cell width b_n/n must be positive");

  const double y = x / h;
  const WeightTable table = weight_table(cfg.gf, y, cfg.epsilon);
  const double t_max = static_cast<double>(table.weights.size()) * h;
  detail::check_growth(f, t_max);

  std::optional<GaussLegendre> rule;
  if (!f.antiderivative_known()) rule.emplace(cfg.quad_order);

  long double acc = 0.0L;
  for (std::size_t k = 0; k < table.weights.size(); ++k) {
    const double lo = static_cast<double>(k) * h;
    const double hi = static_cast<double>(k + 1) * h;
    double cell;
    if (rule) {
      cell = rule->integrate([&](double t) {
        const double v = f(t);
        if (!std::isfinite(v)) throw NonFiniteSampleError("f not finite inside a cell");
        return v;
      }, lo, hi);
    } else {
      cell = f.antiderivative(hi) - f.antiderivative(lo);
    }
    if (!std::isfinite(cell)) throw NonFiniteSampleError("cell integral is not finite");
    acc += static_cast<long double>(table.weights[k]) * static_cast<long double>(cell);
  }
  const double result = static_cast<double>(acc / static_cast<long double>(h));
  if (!std::isfinite(result)) throw GrowthOverflowError("L_n* sum overflowed");
  return result;
}

}  // namespace jaklev
