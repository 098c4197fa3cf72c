#pragma once

// Stable evaluation of a contiguous block of Poisson probabilities
// Pois(k; y) = e^{-y} y^k / k!.
//
// For y <= 700 the forward recurrence Pois(k) = Pois(k-1) * y/k seeded at
// e^{-y} is exact to a few ulp in extended precision.  Beyond that e^{-y}
// underflows, so the block is seeded in log space at the left edge of a
// +-60 sigma window around the mode (everything further out is below
// 1e-780 and is folded into the tail mass), then grown by the same linear
// recurrence.  No path produces NaN or Inf for any finite y >= 0.

#include <cmath>
#include <cstddef>
#include <vector>

#include "jaklev/errors.hpp"

namespace jaklev::detail {

inline constexpr double kPoissonLinearSeedLimit = 700.0;

struct PoissonBlock {
  std::size_t offset = 0;            // first index carried explicitly
  std::vector<long double> pmf;      // pmf[j] = Pois(offset + j; y)

  long double at(std::size_t k) const {
    if (k < offset) return 0.0L;
    const std::size_t j = k - offset;
    return j < pmf.size() ? pmf[j] : 0.0L;
  }
};

/// Poisson probabilities for k = 0..k_max at intensity y >= 0.
inline PoissonBlock poisson_block(double y, std::size_t k_max) {
  if (!(y >= 0.0) || !std::isfinite(y)) throw Error("poisson_block: y must be finite and >= 0");
  PoissonBlock block;
  if (y == 0.0) {
    block.pmf.assign(k_max + 1, 0.0L);
    block.pmf[0] = 1.0L;
    return block;
  }

  const long double ly = static_cast<long double>(y);
  std::size_t k_start = 0;
  long double seed;
  if (y <= kPoissonLinearSeedLimit) {
    seed = std::exp(-ly);
  } else {
    const double lo = y - 60.0 * std::sqrt(y);
    k_start = lo > 1.0 ? static_cast<std::size_t>(lo) : 0;
    if (k_start > k_max) k_start = k_max;
    // one log-space seed: ln Pois(k_start; y) = k ln y - y - ln k!
    const long double lp = static_cast<long double>(k_start) * std::log(ly) - ly -
                           std::lgamma(static_cast<long double>(k_start) + 1.0L);
    seed = std::exp(lp);  // underflows to 0 harmlessly for extreme y
  }

  block.offset = k_start;
  block.pmf.resize(k_max - k_start + 1);
  block.pmf[0] = seed;
  for (std::size_t k = k_start + 1; k <= k_max; ++k) {
    block.pmf[k - k_start] = block.pmf[k - k_start - 1] * (ly / static_cast<long double>(k));
  }
  return block;
}

}  // namespace jaklev::detail
