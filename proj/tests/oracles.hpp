#pragma once

// Test-only oracles, deliberately coded against the definitions rather
// than through the library's evaluation path.

#include <cmath>
#include <functional>

#include "jaklev/appell.hpp"

namespace oracles {

// Classical Szasz-Mirakjan sum S_n(f; x) = e^{-nx} sum (nx)^k/k! f(k/n),
// truncated when the accumulated kernel mass is within 1e-18 of one.
inline double szasz_sum(long n, double x, const std::function<double(double)>& f) {
  const long double y = static_cast<long double>(n) * static_cast<long double>(x);
  long double pmf = std::exp(-y);
  long double mass = 0.0L;
  long double acc = 0.0L;
  for (long k = 0;; ++k) {
    if (k > 0) pmf *= y / static_cast<long double>(k);
    acc += pmf * static_cast<long double>(f(static_cast<double>(k) / static_cast<double>(n)));
    mass += pmf;
    if (mass >= 1.0L - 1e-18L && static_cast<long double>(k) > y) break;
    if (k > 4 * n + 1000000) break;  // safety stop
  }
  return static_cast<double>(acc);
}

// Closed form for P_n(e^{ct}; x): the kernel is a mixture of shifted
// Poisson laws, so the generating-function identity gives
//   P_n(e^{ct}; x) = g(e^{c/n})/g(1) * exp(n x (e^{c/n} - 1)).
inline double pn_exp_closed(const jaklev::GeneratingFunction& gf, long n, double x, double c) {
  const long double u = std::exp(static_cast<long double>(c) / static_cast<long double>(n));
  const long double factor = gf.eval<long double>(u) / static_cast<long double>(gf.g1());
  const long double arg = static_cast<long double>(n) * static_cast<long double>(x) * (u - 1.0L);
  return static_cast<double>(factor * std::exp(arg));
}

// Closed form for L_n*(e^{ct}; x) with h = b_n/n:
//   L_n*(e^{ct}; x) = (e^{ch}-1)/(ch) * g(e^{ch})/g(1) * exp((x/h)(e^{ch}-1)).
inline double lstar_exp_closed(const jaklev::GeneratingFunction& gf, double h, double x,
                               double c) {
  const long double ch = static_cast<long double>(c) * static_cast<long double>(h);
  const long double ech = std::exp(ch);
  const long double cell_factor = ch == 0.0L ? 1.0L : (ech - 1.0L) / ch;
  const long double mix = gf.eval<long double>(ech) / static_cast<long double>(gf.g1());
  const long double arg = (static_cast<long double>(x) / static_cast<long double>(h)) * (ech - 1.0L);
  return static_cast<double>(cell_factor * mix * std::exp(arg));
}

}  // namespace oracles
