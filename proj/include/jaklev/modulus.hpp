#pragma once

// Grid estimates of the moduli of continuity
//
//   omega(f, delta)  = sup { |f(x) - f(y)| : |x - y| <= delta }
//   omega2(f, delta) = sup { |f(x+2t) - 2 f(x+t) + f(x)| : 0 < t <= delta }
//
// restricted to [0, A].  Both are lower bounds of the continuum sup, off by
// at most the grid modulus of f; callers that need conservative bounds use
// a refined grid (step delta/100) and a small tolerance.  The grid step
// must be at most delta/10 or GridTooCoarseError is raised.

#include <cmath>
#include <cstddef>
#include <deque>
#include <vector>

#include "jaklev/errors.hpp"
#include "jaklev/test_function.hpp"

namespace jaklev {

struct ModulusEstimate {
  double delta = 0.0;
  double value = 0.0;
  double grid_step = 0.0;
  double domain = 0.0;  // [0, A]
};

namespace detail {

inline std::vector<double> sample_grid(const TestFunction& f, double A, std::size_t grid_n) {
  std::vector<double> v(grid_n + 1);
  for (std::size_t i = 0; i <= grid_n; ++i) {
    v[i] = f(A * static_cast<double>(i) / static_cast<double>(grid_n));
  }
  return v;
}

}  // namespace detail

/// First modulus on [0, A]: sliding-window max/min over the sample grid,
/// O(grid_n) via monotone deques.
inline ModulusEstimate modulus(const TestFunction& f, double delta, double A, long grid_n) {
  if (!(delta > 0.0)) throw Error("modulus: delta must be > 0");
  if (!(A > 0.0) || grid_n < 1) throw Error("modulus: need A > 0 and grid_n >= 1");
  const double step = A / static_cast<double>(grid_n);
  if (step > delta / 10.0) {
    throw GridTooCoarseError("modulus: grid step " + fmt_double(step) + " exceeds delta/10");
  }
  const std::size_t n = static_cast<std::size_t>(grid_n);
  const std::vector<double> v = detail::sample_grid(f, A, n);
  // window of indices j with x_j - x_i <= delta
  const std::size_t w = static_cast<std::size_t>(delta / step * (1.0 + 1e-12));

  double best = 0.0;
  std::deque<std::size_t> maxq, minq;
  for (std::size_t j = 0; j <= n; ++j) {
    while (!maxq.empty() && v[maxq.back()] <= v[j]) maxq.pop_back();
    maxq.push_back(j);
    while (!minq.empty() && v[minq.back()] >= v[j]) minq.pop_back();
    minq.push_back(j);
    const std::size_t lo = j >= w ? j - w : 0;
    while (maxq.front() < lo) maxq.pop_front();
    while (minq.front() < lo) minq.pop_front();
    best = std::max(best, v[maxq.front()] - v[minq.front()]);
  }
  return {delta, best, step, A};
}

/// Second modulus on [0, A]: sup over on-grid shifts t = m * step <= delta
/// of the second difference, with x + 2t kept inside the domain.
inline ModulusEstimate second_modulus(const TestFunction& f, double delta, double A,
                                      long grid_n) {
  if (!(delta > 0.0)) throw Error("second_modulus: delta must be > 0");
  if (!(A > 0.0) || grid_n < 1) throw Error("second_modulus: need A > 0 and grid_n >= 1");
  const double step = A / static_cast<double>(grid_n);
  if (step > delta / 10.0) {
    throw GridTooCoarseError("second_modulus: grid step " + fmt_double(step) +
                             " exceeds delta/10");
  }
  const std::size_t n = static_cast<std::size_t>(grid_n);
  const std::vector<double> v = detail::sample_grid(f, A, n);
  const std::size_t w = static_cast<std::size_t>(delta / step * (1.0 + 1e-12));

  double best = 0.0;
  for (std::size_t m = 1; m <= w; ++m) {
    for (std::size_t i = 0; i + 2 * m <= n; ++i) {
      best = std::max(best, std::fabs(v[i + 2 * m] - 2.0 * v[i + m] + v[i]));
    }
  }
  return {delta, best, step, A};
}

}  // namespace jaklev
