#pragma once

// Fixed-order Gauss-Legendre panels for the Kantorovich cell integrals.
// Nodes are the roots of the Legendre polynomial P_q, found by Newton
// iteration from the Chebyshev-like initial guess; a q-point rule is exact
// for polynomials of degree <= 2q - 1.  Presets with a closed
// antiderivative bypass quadrature entirely, which keeps monomial moments
// machine-exact so formula discrepancies are attributable to formulas.

#include <cmath>
#include <cstddef>
#include <vector>

#include "jaklev/errors.hpp"
#include "jaklev/test_function.hpp"

namespace jaklev {

class GaussLegendre {
 public:
  explicit GaussLegendre(int order) {
    if (order < 1) throw Error("gauss-legendre order must be >= 1");
    const std::size_t q = static_cast<std::size_t>(order);
    nodes_.resize(q);
    weights_.resize(q);
    for (std::size_t i = 0; i < q; ++i) {
      // initial guess, then Newton on P_q
      double x = std::cos(M_PI * (static_cast<double>(i) + 0.75) /
                          (static_cast<double>(q) + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = x;
        if (q == 1) p1 = x;
        for (std::size_t k = 2; k <= q; ++k) {
          const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
          p0 = p1;
          p1 = pk;
        }
        const double pq = q == 1 ? x : p1;
        const double pq1 = q == 1 ? 1.0 : p0;
        dp = static_cast<double>(q) * (x * pq - pq1) / (x * x - 1.0);
        const double dx = pq / dp;
        x -= dx;
        if (std::fabs(dx) < 1e-15) break;
      }
      nodes_[i] = x;
      weights_[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
  }

  int order() const { return static_cast<int>(nodes_.size()); }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }

  template <typename F>
  double integrate(F&& f, double lo, double hi) const {
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    long double acc = 0.0L;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      acc += static_cast<long double>(weights_[i]) *
             static_cast<long double>(f(mid + half * nodes_[i]));
    }
    return static_cast<double>(acc * static_cast<long double>(half));
  }

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

/// Integral of f over one cell [lo, hi]: exact via the closed antiderivative
/// when the preset has one, Gauss-Legendre with `quad_order` nodes otherwise.
inline double kantorovich_cell_integral(const TestFunction& f, double lo, double hi,
                                        int quad_order) {
  if (!(lo < hi)) throw Error("cell integral requires lo < hi");
  double value;
  if (f.antiderivative_known()) {
    value = f.antiderivative(hi) - f.antiderivative(lo);
  } else {
    const GaussLegendre rule(quad_order);
    value = rule.integrate([&](double t) {
      const double v = f(t);
      if (!std::isfinite(v)) throw NonFiniteSampleError("f returned NaN/Inf inside a cell");
      return v;
    }, lo, hi);
  }
  if (!std::isfinite(value)) throw NonFiniteSampleError("cell integral is not finite");
  return value;
}

}  // namespace jaklev
