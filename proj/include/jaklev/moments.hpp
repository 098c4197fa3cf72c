#pragma once

// Raw and central moments of L_n* up to order two, three ways:
//
//   * moment_oracle      — brute-force summation with exact monomial cell
//                          integrals and 1e-15 tail mass; the ground truth.
//   * moment_closed_form — the adopted closed forms, validated against the
//                          oracle by the test suite before anything
//                          downstream trusts them:
//                            m0 = 1
//                            m1 = x + (g'/g + 1/2) h
//                            m2 = x^2 + 2(1 + g'/g) x h
//                                   + (g''/g + 2 g'/g + 1/3) h^2
//                          with h = b_n/n.  The h/2 in m1 is the mid-cell
//                          average of the Kantorovich window.
//   * paper_*            — the published formulas evaluated verbatim.  The
//                          published first moment carries h where the
//                          mid-cell derivation gives h/2, and the published
//                          second central moment (also quoted as theta_n)
//                          drops the x h term and has +1 where the raw
//                          moments give +1/3.  Reports expose those
//                          discrepancy columns rather than repairing them.
//
// The canonical mu2 consumed by every error bound downstream is the oracle
// value.

#include <array>
#include <cmath>

#include "jaklev/operators.hpp"

namespace jaklev {

/// L_n*(t^j; x) by direct summation, the independent ground truth.
inline double moment_oracle(const OperatorConfig& cfg, int j, double x) {
  if (j < 0 || j > 2) throw Error("moment_oracle: j must be 0, 1 or 2");
  return eval_L_star(cfg.with_epsilon(1e-15), TestFunction::monomial(j), x);
}

/// Adopted closed forms (oracle-validated).
inline double moment_closed_form(const OperatorConfig& cfg, int j, double x) {
  const double h = cfg.cell_width();
  const double mg = cfg.gf.mean_shift();          // g'(1)/g(1)
  const double g2 = cfg.gf.g1pp() / cfg.gf.g1();  // g''(1)/g(1)
  switch (j) {
    case 0: return 1.0;
    case 1: return x + (mg + 0.5) * h;
    case 2: return x * x + 2.0 * (1.0 + mg) * x * h + (g2 + 2.0 * mg + 1.0 / 3.0) * h * h;
    default: throw Error("moment_closed_form: j must be 0, 1 or 2");
  }
}

/// Published raw moments, verbatim.
inline double paper_raw_moment(const OperatorConfig& cfg, int j, double x) {
  const double h = cfg.cell_width();
  const double g1 = cfg.gf.g1();
  const double g1p = cfg.gf.g1p();
  const double g2 = cfg.gf.g1pp() / g1;
  switch (j) {
    case 0: return 1.0;
    case 1: return x + (g1p / g1) * h + h;
    case 2: return x * x + h * x * ((g1 + 2.0 * g1p) / g1 + 1.0) +
                   h * h * (2.0 * g1p / g1 + g2 + 1.0 / 3.0);
    default: throw Error("paper_raw_moment: j must be 0, 1 or 2");
  }
}

/// Published first central moment, verbatim.
inline double paper_central_first(const OperatorConfig& cfg) {
  const double h = cfg.cell_width();
  return (cfg.gf.mean_shift() + 1.0) * h;
}

/// Published second central moment == theta_n of the modulus bound.
inline double paper_theta(const OperatorConfig& cfg) {
  const double h = cfg.cell_width();
  const double mg = cfg.gf.mean_shift();
  const double g2 = cfg.gf.g1pp() / cfg.gf.g1();
  return h * h * (2.0 * mg + g2 + 1.0);
}

/// Published xi_n of the C_B^2 bound: first central moment plus theta_n.
inline double paper_xi(const OperatorConfig& cfg) {
  return paper_central_first(cfg) + paper_theta(cfg);
}

struct MomentReport {
  long n = 0;
  double x = 0.0;
  std::array<double, 3> raw{};             // oracle m0, m1, m2
  std::array<double, 3> central{};         // 1, mu1, mu2 from the oracle raws
  std::array<double, 3> closed{};          // adopted closed forms
  std::array<double, 3> paper_raw{};       // published raw moments
  std::array<double, 3> paper_central{};   // 1, published mu1, published mu2
  double theta_n = 0.0;
  std::array<double, 3> delta_paper_raw{};      // paper_raw - raw
  std::array<double, 3> delta_paper_central{};  // paper_central - central
  std::array<double, 3> delta_closed{};         // closed - raw (build gate)
};

/// Full adjudication row at (n, x): oracle, closed forms, published claims,
/// and their differences.
inline MomentReport central_moments(const OperatorConfig& cfg, double x) {
  MomentReport r;
  r.n = cfg.n;
  r.x = x;
  for (int j = 0; j <= 2; ++j) {
    r.raw[static_cast<std::size_t>(j)] = moment_oracle(cfg, j, x);
    r.closed[static_cast<std::size_t>(j)] = moment_closed_form(cfg, j, x);
    r.paper_raw[static_cast<std::size_t>(j)] = paper_raw_moment(cfg, j, x);
  }
  r.central = {1.0, r.raw[1] - x, r.raw[2] - 2.0 * x * r.raw[1] + x * x};
  r.theta_n = paper_theta(cfg);
  r.paper_central = {1.0, paper_central_first(cfg), r.theta_n};
  for (std::size_t j = 0; j < 3; ++j) {
    r.delta_paper_raw[j] = r.paper_raw[j] - r.raw[j];
    r.delta_paper_central[j] = r.paper_central[j] - r.central[j];
    r.delta_closed[j] = r.closed[j] - r.raw[j];
  }
  return r;
}

/// Oracle central moments (mu1, mu2); mu2 feeds every certificate.
inline std::array<double, 2> oracle_central(const OperatorConfig& cfg, double x) {
  const double m1 = moment_oracle(cfg, 1, x);
  const double m2 = moment_oracle(cfg, 2, x);
  return {m1 - x, m2 - 2.0 * x * m1 + x * x};
}

}  // namespace jaklev
