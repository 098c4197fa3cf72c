#pragma once

// Appell polynomial sequences p_k generated by a polynomial g:
//
//   g(u) e^{ux} = sum_k p_k(x) u^k,   p_k(x) = sum_i a_i x^{k-i}/(k-i)!
//
// g is restricted to a finite coefficient list a_0..a_M, which keeps
// g(1), g'(1), g''(1) exact finite sums.  All moment formulas downstream
// are parametrized by these three constants.
//
// Positivity of the induced operators holds iff a_k/g(1) >= 0 for all k
// (Wood's criterion); positivity_check reports the ratio list.

#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

#include "jaklev/errors.hpp"

namespace jaklev {

class GeneratingFunction {
 public:
  explicit GeneratingFunction(std::vector<double> coeffs)
      : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw Error("generating function needs at least one coefficient");
    for (double a : coeffs_) {
      if (!std::isfinite(a)) throw Error("generating function coefficient is not finite");
    }
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const double di = static_cast<double>(i);
      g1_ += coeffs_[i];
      g1p_ += di * coeffs_[i];
      g1pp_ += di * (di - 1.0) * coeffs_[i];
    }
    if (g1_ == 0.0) throw ZeroG1Error("g(1) = 0: operator normalization undefined");
  }

  const std::vector<double>& coeffs() const { return coeffs_; }
  std::size_t degree() const { return coeffs_.size() - 1; }

  double g1() const { return g1_; }
  double g1p() const { return g1p_; }
  double g1pp() const { return g1pp_; }

  /// Mixture mean sum_k k a_k / g(1) = g'(1)/g(1).
  double mean_shift() const { return g1p_ / g1_; }
  /// Mixture second raw moment sum_k k^2 a_k / g(1) = (g''(1)+g'(1))/g(1).
  double second_shift() const { return (g1pp_ + g1p_) / g1_; }

  /// g(u) by Horner's rule.
  template <typename Real = double>
  Real eval(Real u) const {
    Real acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * u + static_cast<Real>(coeffs_[i]);
    return acc;
  }

  /// Normalized coefficients a_k/g(1), k = 0..M.
  std::vector<double> ratios() const {
    std::vector<double> r(coeffs_.size());
    for (std::size_t k = 0; k < coeffs_.size(); ++k) r[k] = coeffs_[k] / g1_;
    return r;
  }

 private:
  std::vector<double> coeffs_;
  double g1_ = 0.0;
  double g1p_ = 0.0;
  double g1pp_ = 0.0;
};

namespace detail {

// p_k(x) = sum_{i=0}^{min(k,M)} a_i x^{k-i}/(k-i)!, with x^m/m! built as a
// running product so huge k neither overflows x^m nor m!.
template <typename Real>
Real appell_eval_impl(const GeneratingFunction& gf, long k, Real x) {
  const auto& a = gf.coeffs();
  const long m_max = static_cast<long>(gf.degree());
  Real term = 1;  // x^m/m! at m = 0
  Real acc = 0;
  for (long m = 0; m <= k; ++m) {
    if (m > 0) term *= x / static_cast<Real>(m);
    const long i = k - m;  // coefficient index pairing x^m/m!
    if (i <= m_max) acc += static_cast<Real>(a[static_cast<std::size_t>(i)]) * term;
  }
  return acc;
}

}  // namespace detail

/// Evaluate the Appell polynomial p_k(x) by direct summation of the
/// definition.  Exact (up to rounding) for polynomial g.
inline double appell_eval(const GeneratingFunction& gf, long k, double x) {
  if (k < 0) throw Error("appell_eval: k must be >= 0");
  return detail::appell_eval_impl<double>(gf, k, x);
}

/// Monomial-basis coefficients of p_k, ascending powers: coefficient of x^m
/// is a_{k-m}/m! (zero when k-m exceeds the degree of g).
inline std::vector<double> appell_coefficients(const GeneratingFunction& gf, long k) {
  if (k < 0) throw Error("appell_coefficients: k must be >= 0");
  const auto& a = gf.coeffs();
  const long m_max = static_cast<long>(gf.degree());
  std::vector<double> c(static_cast<std::size_t>(k) + 1, 0.0);
  double inv_fact = 1.0;  // 1/m!
  for (long m = 0; m <= k; ++m) {
    if (m > 0) inv_fact /= static_cast<double>(m);
    const long i = k - m;
    if (i <= m_max) c[static_cast<std::size_t>(m)] = a[static_cast<std::size_t>(i)] * inv_fact;
  }
  return c;
}

struct PositivityReport {
  bool is_positive = false;
  std::optional<std::size_t> offending_index;  // smallest k with a_k/g(1) < 0
  std::vector<double> ratios;
};

/// Wood's criterion: the operators are positive iff a_k/g(1) >= 0 for all k.
inline PositivityReport positivity_check(const GeneratingFunction& gf) {
  PositivityReport report;
  report.ratios = gf.ratios();
  report.is_positive = true;
  for (std::size_t k = 0; k < report.ratios.size(); ++k) {
    if (report.ratios[k] < 0.0) {
      report.is_positive = false;
      report.offending_index = k;
      break;
    }
  }
  return report;
}

/// |g(u) e^{ux} - sum_{k<=K} p_k(x) u^k|.  Both sides evaluated in extended
/// precision; for |u| < 1 the truncated series converges to the left side,
/// so the residual decays to the rounding floor as K grows.
inline double identity_residual(const GeneratingFunction& gf, double u, double x, long K) {
  if (K < 0) throw Error("identity_residual: K must be >= 0");
  const long double lhs = gf.eval<long double>(static_cast<long double>(u)) *
                          std::exp(static_cast<long double>(u) * static_cast<long double>(x));
  long double rhs = 0;
  long double u_pow = 1;  // u^k
  for (long k = 0; k <= K; ++k) {
    if (k > 0) u_pow *= static_cast<long double>(u);
    rhs += detail::appell_eval_impl<long double>(gf, k, static_cast<long double>(x)) * u_pow;
  }
  return static_cast<double>(std::fabs(lhs - rhs));
}

}  // namespace jaklev
