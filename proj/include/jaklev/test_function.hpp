#pragma once

// Test-function presets for the operator experiments.  Every preset is a
// function on [0, inf) of exponential type (|f| <= beta e^{alpha x}) and
// carries whatever exact metadata it supports:
//
//   * a closed antiderivative, so Kantorovich cell integrals of the preset
//     are quadrature-free,
//   * sup norms of f, f', f'' on [0, inf) when these exist in closed form,
//   * a linear envelope |f'(x)| <= p + q x together with ||f''||, feeding
//     the analytic tail bounds of the weighted-norm experiments,
//   * a tail bound for |f(x)|/(1+x^2) beyond a cutoff, when the growth
//     class permits one.
//
// The `scale` factor multiplies the base function and all derived metadata.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "jaklev/errors.hpp"
#include "jaklev/format.hpp"

namespace jaklev {

struct GrowthClass {
  double alpha = 0.0;  // exponent
  double beta = 1.0;   // amplitude: |f(x)| <= beta * e^{alpha x}
};

struct Cb2Norms {
  double f = 0.0;   // ||f||_inf on [0, inf)
  double f1 = 0.0;  // ||f'||_inf
  double f2 = 0.0;  // ||f''||_inf
};

// |f'(x)| <= p + q x on [0, inf), ||f''|| <= f2_sup.
struct TaylorEnvelope {
  double p = 0.0;
  double q = 0.0;
  double f2_sup = 0.0;
};

namespace detail {

// sup over x >= X of (a x + b)/(1 + x^2) for a, b >= 0.
inline double sup_linear_over_rho(double a, double b, double X) {
  const auto phi = [&](double x) { return (a * x + b) / (1.0 + x * x); };
  if (a <= 0.0) return b / (1.0 + X * X);
  const double x_star = (-b + std::sqrt(b * b + a * a)) / a;  // unique max
  return X >= x_star ? phi(X) : phi(x_star);
}

}  // namespace detail

class TestFunction {
 public:
  enum class Kind {
    Monomial,         // x^j
    Exp,              // e^{cx}
    AbsShift,         // |x - c|
    Sin,              // sin(cx)
    Poly,             // general polynomial, ascending coefficients
    MonomialExp,      // x^j e^{cx}
    ClampedMonomial,  // min(x, cap)^j
    Tabulated,        // piecewise-linear interpolant of samples
  };

  static TestFunction monomial(int j, double scale = 1.0) {
    TestFunction f(Kind::Monomial, scale);
    f.degree_ = check_degree(j);
    return f;
  }
  static TestFunction constant(double value) { return monomial(0, value); }
  static TestFunction exponential(double c, double scale = 1.0) {
    TestFunction f(Kind::Exp, scale);
    f.c_ = c;
    return f;
  }
  static TestFunction abs_shift(double c, double scale = 1.0) {
    TestFunction f(Kind::AbsShift, scale);
    f.c_ = c;
    return f;
  }
  static TestFunction sine(double c, double scale = 1.0) {
    TestFunction f(Kind::Sin, scale);
    f.c_ = c;
    return f;
  }
  static TestFunction poly(std::vector<double> coeffs, double scale = 1.0) {
    if (coeffs.empty()) throw Error("poly preset needs at least one coefficient");
    TestFunction f(Kind::Poly, scale);
    f.coeffs_ = std::move(coeffs);
    return f;
  }
  static TestFunction monomial_exp(int j, double c, double scale = 1.0) {
    TestFunction f(Kind::MonomialExp, scale);
    f.degree_ = check_degree(j);
    f.c_ = c;
    return f;
  }
  static TestFunction clamped_monomial(int j, double cap, double scale = 1.0) {
    if (!(cap > 0.0)) throw Error("clamped_monomial: cap must be > 0");
    TestFunction f(Kind::ClampedMonomial, scale);
    f.degree_ = check_degree(j);
    f.c_ = cap;
    return f;
  }
  static TestFunction tabulated(std::vector<double> xs, std::vector<double> ys,
                                double scale = 1.0) {
    if (xs.size() != ys.size() || xs.size() < 2) {
      throw Error("tabulated preset needs matching xs/ys with >= 2 samples");
    }
    for (std::size_t i = 1; i < xs.size(); ++i) {
      if (!(xs[i] > xs[i - 1])) throw Error("tabulated preset xs must be strictly increasing");
    }
    TestFunction f(Kind::Tabulated, scale);
    f.xs_ = std::move(xs);
    f.ys_ = std::move(ys);
    return f;
  }

  Kind kind() const { return kind_; }
  int degree() const { return degree_; }
  double param() const { return c_; }
  double scale() const { return scale_; }
  const std::vector<double>& coeffs() const { return coeffs_; }

  double operator()(double x) const { return scale_ * base(x); }

  /// The presets keep exact antiderivatives whenever one exists, so cell
  /// integrals of non-smooth presets (|x-c|, clamped monomials) stay exact.
  bool antiderivative_known() const { return kind_ != Kind::Tabulated && !force_quadrature_; }

  /// Copy that hides the closed antiderivative, forcing the quadrature path.
  TestFunction without_antiderivative() const {
    TestFunction f = *this;
    f.force_quadrature_ = true;
    return f;
  }

  double antiderivative(double t) const {
    switch (kind_) {
      case Kind::Monomial:
        return scale_ * power_int(t, degree_ + 1) / (degree_ + 1.0);
      case Kind::Poly: {
        double acc = 0.0;
        double tp = t;  // t^{j+1}
        for (std::size_t j = 0; j < coeffs_.size(); ++j) {
          acc += coeffs_[j] * tp / (static_cast<double>(j) + 1.0);
          tp *= t;
        }
        return scale_ * acc;
      }
      case Kind::Exp:
        return c_ == 0.0 ? scale_ * t : scale_ * std::exp(c_ * t) / c_;
      case Kind::Sin:
        return c_ == 0.0 ? 0.0 : -scale_ * std::cos(c_ * t) / c_;
      case Kind::AbsShift: {
        const double d = t - c_;
        return scale_ * 0.5 * d * std::fabs(d);
      }
      case Kind::MonomialExp: {
        if (c_ == 0.0) return scale_ * power_int(t, degree_ + 1) / (degree_ + 1.0);
        const double e = std::exp(c_ * t);
        switch (degree_) {
          case 0: return scale_ * e / c_;
          case 1: return scale_ * e * (t / c_ - 1.0 / (c_ * c_));
          case 2: return scale_ * e * (t * t / c_ - 2.0 * t / (c_ * c_) + 2.0 / (c_ * c_ * c_));
          default: break;
        }
        throw Error("monomial_exp antiderivative implemented for j <= 2");
      }
      case Kind::ClampedMonomial: {
        const double jp1 = degree_ + 1.0;
        if (t <= c_) return scale_ * power_int(t, degree_ + 1) / jp1;
        return scale_ * (power_int(c_, degree_ + 1) / jp1 + power_int(c_, degree_) * (t - c_));
      }
      case Kind::Tabulated:
        break;
    }
    throw Error("antiderivative not available for this preset");
  }

  GrowthClass growth() const {
    const double s = std::fabs(scale_);
    switch (kind_) {
      case Kind::Monomial:
        return degree_ == 0 ? GrowthClass{0.0, s} : GrowthClass{1.0, s * peak_over_exp(degree_, 1.0)};
      case Kind::Poly: {
        double beta = 0.0;
        for (std::size_t j = 0; j < coeffs_.size(); ++j) {
          beta += std::fabs(coeffs_[j]) * peak_over_exp(static_cast<int>(j), 1.0);
        }
        return {1.0, s * beta};
      }
      case Kind::Exp:
        return {std::max(c_, 0.0), s};
      case Kind::AbsShift:
        return {1.0, s * (std::fabs(c_) + 1.0)};
      case Kind::Sin:
        return {0.0, s};
      case Kind::MonomialExp:
        if (c_ >= 0.0) return {c_ + 1.0, s * peak_over_exp(degree_, 1.0)};
        return {0.0, s * peak_over_exp(degree_, -c_)};
      case Kind::ClampedMonomial:
        return {0.0, s * power_int(c_, degree_)};
      case Kind::Tabulated:
        return {0.0, s * max_abs(ys_)};
    }
    return {};
  }

  /// sup of |f| over [0, T]; a monotone envelope, not necessarily attained.
  double majorant(double T) const {
    const double s = std::fabs(scale_);
    switch (kind_) {
      case Kind::Monomial:
        return s * power_int(T, degree_);
      case Kind::Poly: {
        double acc = 0.0;
        for (std::size_t j = 0; j < coeffs_.size(); ++j) {
          acc += std::fabs(coeffs_[j]) * power_int(T, static_cast<int>(j));
        }
        return s * acc;
      }
      case Kind::Exp:
        return c_ >= 0.0 ? s * std::exp(c_ * T) : s;
      case Kind::AbsShift:
        return s * std::max(std::fabs(c_), std::fabs(T - c_));
      case Kind::Sin:
        return s;
      case Kind::MonomialExp: {
        if (c_ >= 0.0) return s * power_int(T, degree_) * std::exp(c_ * T);
        const double x_peak = degree_ / -c_;
        const double x = std::min(T, x_peak);
        return s * power_int(x, degree_) * std::exp(c_ * x);
      }
      case Kind::ClampedMonomial:
        return s * power_int(std::min(T, c_), degree_);
      case Kind::Tabulated:
        return s * max_abs(ys_);
    }
    return 0.0;
  }

  /// ||f||_inf on [0, inf) when finite.
  std::optional<double> sup_norm() const {
    const double s = std::fabs(scale_);
    switch (kind_) {
      case Kind::Monomial:
        return degree_ == 0 ? std::optional<double>(s) : std::nullopt;
      case Kind::Poly:
        return coeffs_.size() == 1 ? std::optional<double>(s * std::fabs(coeffs_[0]))
                                   : std::nullopt;
      case Kind::Exp:
        return c_ <= 0.0 ? std::optional<double>(s) : std::nullopt;
      case Kind::AbsShift:
        return std::nullopt;
      case Kind::Sin:
        return c_ == 0.0 ? std::optional<double>(0.0) : std::optional<double>(s);
      case Kind::MonomialExp:
        if (c_ < 0.0) return s * peak_over_exp(degree_, -c_);
        if (c_ == 0.0 && degree_ == 0) return s;
        return std::nullopt;
      case Kind::ClampedMonomial:
        return s * power_int(c_, degree_);
      case Kind::Tabulated:
        return s * max_abs(ys_);
    }
    return std::nullopt;
  }

  /// Closed-form sup norms of f, f', f'' on [0, inf) for the C_B^2 presets.
  std::optional<Cb2Norms> cb2_norms() const {
    const double s = std::fabs(scale_);
    switch (kind_) {
      case Kind::Monomial:
        return degree_ == 0 ? std::optional<Cb2Norms>({s, 0.0, 0.0}) : std::nullopt;
      case Kind::Poly:
        return coeffs_.size() == 1
                   ? std::optional<Cb2Norms>({s * std::fabs(coeffs_[0]), 0.0, 0.0})
                   : std::nullopt;
      case Kind::Sin:
        if (c_ == 0.0) return Cb2Norms{0.0, 0.0, 0.0};
        return Cb2Norms{s, s * std::fabs(c_), s * c_ * c_};
      case Kind::Exp:
        return c_ <= 0.0 ? std::optional<Cb2Norms>({s, s * std::fabs(c_), s * c_ * c_})
                         : std::nullopt;
      case Kind::MonomialExp: {
        if (!(c_ < 0.0)) return std::nullopt;
        const double m = -c_;
        // With u = |c| x:  x^j e^{cx} = u^j e^{-u} / |c|^j; d/dx = |c| d/du.
        if (degree_ == 1) {
          return Cb2Norms{s * std::exp(-1.0) / m, s, s * 2.0 * m};
        }
        if (degree_ == 2) {
          static const double kSqrt2 = std::sqrt(2.0);
          const double d1 = (2.0 * kSqrt2 - 2.0) * std::exp(-(2.0 - kSqrt2));  // max |(2u-u^2)e^{-u}|
          return Cb2Norms{s * 4.0 * std::exp(-2.0) / (m * m), s * d1 / m, s * 2.0};
        }
        return std::nullopt;  // j = 0 is the Exp preset
      }
      default:
        return std::nullopt;
    }
  }

  /// Linear first-derivative envelope + ||f''|| for the weighted tail bounds.
  std::optional<TaylorEnvelope> taylor_envelope() const {
    const double s = std::fabs(scale_);
    switch (kind_) {
      case Kind::Monomial:
        if (degree_ == 0) return TaylorEnvelope{0.0, 0.0, 0.0};
        if (degree_ == 1) return TaylorEnvelope{s, 0.0, 0.0};
        if (degree_ == 2) return TaylorEnvelope{0.0, 2.0 * s, 2.0 * s};
        return std::nullopt;
      case Kind::Poly: {
        if (coeffs_.size() > 3) return std::nullopt;
        const double c1 = coeffs_.size() > 1 ? std::fabs(coeffs_[1]) : 0.0;
        const double c2 = coeffs_.size() > 2 ? std::fabs(coeffs_[2]) : 0.0;
        return TaylorEnvelope{s * c1, s * 2.0 * c2, s * 2.0 * c2};
      }
      case Kind::Exp:
        if (c_ > 0.0) return std::nullopt;
        return TaylorEnvelope{s * std::fabs(c_), 0.0, s * c_ * c_};
      case Kind::Sin:
        return TaylorEnvelope{s * std::fabs(c_), 0.0, s * c_ * c_};
      case Kind::MonomialExp: {
        const auto norms = cb2_norms();
        if (!norms) return std::nullopt;
        return TaylorEnvelope{norms->f1, 0.0, norms->f2};
      }
      default:
        return std::nullopt;
    }
  }

  /// sup over x >= X of |f(x)|/(1+x^2); nullopt when the growth class
  /// exceeds rho (f is outside B_rho and no tail bound exists).
  std::optional<double> rho_tail_bound(double X) const {
    const double s = std::fabs(scale_);
    const double rho_X = 1.0 + X * X;
    switch (kind_) {
      case Kind::Monomial:
        if (degree_ == 0) return s / rho_X;
        if (degree_ == 1) return detail::sup_linear_over_rho(s, 0.0, X);
        if (degree_ == 2) return s;  // x^2/(1+x^2) increases to 1
        return std::nullopt;
      case Kind::Poly: {
        if (coeffs_.size() > 3) return std::nullopt;
        const double c0 = std::fabs(coeffs_[0]);
        const double c1 = coeffs_.size() > 1 ? std::fabs(coeffs_[1]) : 0.0;
        const double c2 = coeffs_.size() > 2 ? std::fabs(coeffs_[2]) : 0.0;
        return s * (c2 + detail::sup_linear_over_rho(c1, c0, X));
      }
      case Kind::Exp:
        if (c_ > 0.0) return std::nullopt;
        return s * std::exp(c_ * X) / rho_X;
      case Kind::AbsShift:
        return detail::sup_linear_over_rho(s, s * std::fabs(c_), X);
      case Kind::Sin:
        return s / rho_X;
      case Kind::MonomialExp: {
        if (c_ > 0.0) return std::nullopt;
        if (c_ == 0.0) return monomial(degree_, scale_).rho_tail_bound(X);
        // x^j e^{cx}/(1+x^2) is decreasing once x > j/|c|.
        if (X > degree_ / -c_) return s * power_int(X, degree_) * std::exp(c_ * X) / rho_X;
        return s * peak_over_exp(degree_, -c_);
      }
      case Kind::ClampedMonomial:
        return s * power_int(c_, degree_) / rho_X;
      case Kind::Tabulated:
        return s * max_abs(ys_) / rho_X;
    }
    return std::nullopt;
  }

  /// Member of C_rho^k: lim f/rho exists and is finite.
  bool in_c_rho_k() const { return rho_tail_bound(1.0).has_value(); }

  std::string label() const {
    std::string base;
    switch (kind_) {
      case Kind::Monomial: base = "t^" + std::to_string(degree_); break;
      case Kind::Exp: base = "exp(" + fmt_double(c_) + "t)"; break;
      case Kind::AbsShift: base = "|t-" + fmt_double(c_) + "|"; break;
      case Kind::Sin: base = "sin(" + fmt_double(c_) + "t)"; break;
      case Kind::Poly: {
        base = "poly[";
        for (std::size_t j = 0; j < coeffs_.size(); ++j) {
          if (j) base += ",";
          base += fmt_double(coeffs_[j]);
        }
        base += "]";
        break;
      }
      case Kind::MonomialExp:
        base = "t^" + std::to_string(degree_) + "*exp(" + fmt_double(c_) + "t)";
        break;
      case Kind::ClampedMonomial:
        base = "min(t," + fmt_double(c_) + ")^" + std::to_string(degree_);
        break;
      case Kind::Tabulated:
        base = "tabulated[" + std::to_string(xs_.size()) + "]";
        break;
    }
    if (scale_ != 1.0) base = fmt_double(scale_) + "*" + base;
    return base;
  }

 private:
  TestFunction(Kind kind, double scale) : kind_(kind), scale_(scale) {
    if (!std::isfinite(scale)) throw Error("preset scale must be finite");
  }

  static int check_degree(int j) {
    if (j < 0) throw Error("monomial degree must be >= 0");
    return j;
  }

  static double power_int(double x, int j) {
    double acc = 1.0;
    for (int i = 0; i < j; ++i) acc *= x;
    return acc;
  }

  // max over x >= 0 of x^j e^{-m x} = (j/(e m))^j, attained at x = j/m.
  static double peak_over_exp(int j, double m) {
    return j == 0 ? 1.0 : power_int(static_cast<double>(j) / (std::exp(1.0) * m), j);
  }

  static double max_abs(const std::vector<double>& v) {
    double acc = 0.0;
    for (double y : v) acc = std::max(acc, std::fabs(y));
    return acc;
  }

  double base(double x) const {
    switch (kind_) {
      case Kind::Monomial: return power_int(x, degree_);
      case Kind::Poly: {
        double acc = 0.0;
        for (std::size_t j = coeffs_.size(); j-- > 0;) acc = acc * x + coeffs_[j];
        return acc;
      }
      case Kind::Exp: return std::exp(c_ * x);
      case Kind::AbsShift: return std::fabs(x - c_);
      case Kind::Sin: return std::sin(c_ * x);
      case Kind::MonomialExp: return power_int(x, degree_) * std::exp(c_ * x);
      case Kind::ClampedMonomial: return power_int(std::min(x, c_), degree_);
      case Kind::Tabulated: {
        if (x <= xs_.front()) return ys_.front();
        if (x >= xs_.back()) return ys_.back();
        const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
        const std::size_t i = static_cast<std::size_t>(it - xs_.begin());
        const double t = (x - xs_[i - 1]) / (xs_[i] - xs_[i - 1]);
        return ys_[i - 1] + t * (ys_[i] - ys_[i - 1]);
      }
    }
    return 0.0;
  }

  Kind kind_;
  double scale_ = 1.0;
  int degree_ = 0;
  double c_ = 0.0;
  bool force_quadrature_ = false;
  std::vector<double> coeffs_;
  std::vector<double> xs_, ys_;
};

}  // namespace jaklev
