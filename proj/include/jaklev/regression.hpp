#pragma once

// Least-squares slope of ln(err) against ln(n), the empirical convergence
// order.  Requires at least three positive samples.

#include <cmath>
#include <optional>
#include <utility>
#include <vector>

namespace jaklev {

inline std::optional<double> loglog_slope(const std::vector<std::pair<double, double>>& pts) {
  std::vector<std::pair<double, double>> usable;
  for (const auto& [n, err] : pts) {
    if (n > 0.0 && err > 0.0) usable.emplace_back(std::log(n), std::log(err));
  }
  if (usable.size() < 3) return std::nullopt;
  double mx = 0.0, my = 0.0;
  for (const auto& [lx, ly] : usable) {
    mx += lx;
    my += ly;
  }
  mx /= static_cast<double>(usable.size());
  my /= static_cast<double>(usable.size());
  double sxx = 0.0, sxy = 0.0;
  for (const auto& [lx, ly] : usable) {
    sxx += (lx - mx) * (lx - mx);
    sxy += (lx - mx) * (ly - my);
  }
  if (sxx == 0.0) return std::nullopt;
  return sxy / sxx;
}

}  // namespace jaklev
