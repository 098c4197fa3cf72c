#pragma once

// Normalized operator kernel w_k(y) = e^{-y} p_k(y) / g(1).
//
// Under Wood's positivity criterion the coefficients c_i = a_i/g(1) are a
// probability vector, and the Appell definition factors the kernel into a
// mixture of shifted Poisson laws:
//
//   w_k(y) = sum_i c_i Pois(k - i; y)
//
// which is what gets computed here.  This avoids evaluating e^{-y} p_k(y)
// directly (p_k(y) overflows long before the product does) and makes
// sum_k w_k = 1 structural.  Truncation keeps cumulative mass >= 1 - eps,
// with a hard cap K <= ceil(y + 12 sqrt(y) + 50 + M) from the Poisson
// upper tail; tail_mass is defined as 1 - sum of retained weights, so the
// normalization identity holds by construction.

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "jaklev/appell.hpp"
#include "jaklev/errors.hpp"
#include "jaklev/poisson.hpp"

namespace jaklev {

struct WeightTable {
  double y = 0.0;                // scaled argument (nx or nx/b_n)
  std::vector<double> weights;   // w_0..w_K
  double tail_mass = 0.0;        // 1 - sum(weights), >= 0 up to rounding
  double epsilon = 0.0;          // requested tail tolerance
};

inline std::size_t weight_cap(double y, std::size_t degree) {
  const double cap = std::ceil(y + 12.0 * std::sqrt(y) + 50.0) + static_cast<double>(degree);
  return static_cast<std::size_t>(cap);
}

/// Kernel weights at argument y, truncated to cumulative mass >= 1 - epsilon.
/// Throws NotPositiveError when some a_k/g(1) < 0 and InvalidEpsilonError
/// unless epsilon is in (0, 1).
inline WeightTable weight_table(const GeneratingFunction& gf, double y, double epsilon) {
  if (!(epsilon > 0.0) || !(epsilon < 1.0)) {
    throw InvalidEpsilonError("weight_table: epsilon must be in (0, 1)");
  }
  if (!(y >= 0.0) || !std::isfinite(y)) {
    throw Error("weight_table: y must be finite and >= 0");
  }
  const PositivityReport pos = positivity_check(gf);
  if (!pos.is_positive) {
    throw NotPositiveError("weight_table: a_" + std::to_string(*pos.offending_index) +
                           "/g(1) < 0, kernel is not a probability mixture");
  }

  const std::vector<double>& c = pos.ratios;
  const std::size_t m = gf.degree();
  const std::size_t cap = weight_cap(y, m);
  const detail::PoissonBlock block = detail::poisson_block(y, cap);

  WeightTable table;
  table.y = y;
  table.epsilon = epsilon;
  table.weights.reserve(std::min<std::size_t>(cap + 1, 1024));

  long double cumulative = 0.0L;
  const long double target = 1.0L - static_cast<long double>(epsilon);
  for (std::size_t k = 0; k <= cap; ++k) {
    long double w = 0.0L;
    const std::size_t i_max = k < m ? k : m;
    for (std::size_t i = 0; i <= i_max; ++i) {
      w += static_cast<long double>(c[i]) * block.at(k - i);
    }
    table.weights.push_back(static_cast<double>(w));
    cumulative += w;
    if (cumulative >= target) break;
  }
  const long double tail = 1.0L - cumulative;
  table.tail_mass = tail > 0.0L ? static_cast<double>(tail) : 0.0;
  return table;
}

}  // namespace jaklev
