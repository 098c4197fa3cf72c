#pragma once

// Config-driven experiment runner behind the CLI.  Each command produces
// one CSV plus a JSON metadata sidecar that echoes the fully resolved
// config.  Cells fan out to worker threads; results land in index-ordered
// slots and a single writer emits them after a deterministic sort, so the
// artifacts are byte-identical for any thread count.
//
// Hard invariant checks (normalization rows, closed-form-vs-oracle moment
// agreement) feed the process exit code; certificate failures are counted
// separately for --strict.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "jaklev/certificates.hpp"
#include "jaklev/config.hpp"
#include "jaklev/convergence.hpp"
#include "jaklev/csv.hpp"
#include "jaklev/moments.hpp"
#include "jaklev/operators.hpp"
#include "jaklev/parallel.hpp"
#include "jaklev/weighted.hpp"

namespace jaklev {

struct RunOptions {
  std::string out_dir = ".";
  unsigned threads = 1;
  bool strict = false;
  long seed = 0;  // reserved; no randomness in any core path
};

struct RunSummary {
  bool hard_checks_ok = true;
  std::vector<std::string> hard_failures;
  long cert_failures = 0;
  std::vector<std::string> outputs;
};

namespace detail {

inline OperatorConfig base_operator_config(const ExperimentConfig& cfg) {
  return OperatorConfig(GeneratingFunction(cfg.gf_coeffs), cfg.n_list.front(), cfg.scale,
                        cfg.epsilon, cfg.quad_order);
}

inline std::string out_path(const RunOptions& opt, const std::string& name) {
  std::filesystem::create_directories(opt.out_dir);
  return (std::filesystem::path(opt.out_dir) / name).string();
}

inline void write_meta(const ExperimentConfig& cfg, const RunOptions& opt,
                       const std::string& command, nlohmann::json extra, RunSummary& summary) {
  nlohmann::json meta;
  meta["command"] = command;
  meta["config"] = config_to_json(cfg);
  if (!extra.is_null()) meta["summary"] = std::move(extra);
  const std::string path = out_path(opt, command + ".meta.json");
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot open " + path + " for writing");
  file << meta.dump(2) << "\n";
  summary.outputs.push_back(path);
}

inline std::string fmt_bool(bool b) { return b ? "true" : "false"; }

}  // namespace detail

/// `eval`: P_n and L_n* for every (function, n, x-grid) cell.
inline RunSummary run_eval(const ExperimentConfig& cfg, const RunOptions& opt) {
  cfg.validate();
  RunSummary summary;
  const OperatorConfig base = detail::base_operator_config(cfg);

  struct Cell {
    std::string label;
    long n;
    double x, fx, p, lstar;
  };
  const std::size_t nx = static_cast<std::size_t>(cfg.x_points);
  const std::size_t total = cfg.functions.size() * cfg.n_list.size() * nx;
  std::vector<Cell> cells(total);
  parallel_for(total, opt.threads, [&](std::size_t idx) {
    const std::size_t fi = idx / (cfg.n_list.size() * nx);
    const std::size_t ni = (idx / nx) % cfg.n_list.size();
    const std::size_t xi = idx % nx;
    const TestFunction& f = cfg.functions[fi];
    const OperatorConfig op = base.with_n(cfg.n_list[ni]);
    const double x = cfg.x_max * static_cast<double>(xi) / static_cast<double>(nx - 1);
    cells[idx] = {f.label(), cfg.n_list[ni], x, f(x), eval_P(op, f, x), eval_L_star(op, f, x)};
  });

  CsvWriter csv({"function", "n", "x", "f_x", "p_n", "l_star", "abs_error"});
  for (const Cell& c : cells) {
    if (!std::isfinite(c.p) || !std::isfinite(c.lstar)) {
      summary.hard_checks_ok = false;
      summary.hard_failures.push_back("non-finite operator value for " + c.label);
    }
    csv.add_row({c.label, fmt_long(c.n), fmt_double(c.x), fmt_double(c.fx), fmt_double(c.p),
                 fmt_double(c.lstar), fmt_double(std::fabs(c.lstar - c.fx))});
  }
  const std::string path = detail::out_path(opt, "eval.csv");
  csv.write(path);
  summary.outputs.push_back(path);
  detail::write_meta(cfg, opt, "eval", nullptr, summary);
  return summary;
}

/// `moments`: the Lemma 1 / Lemma 2 adjudication table over (n, x).
inline RunSummary run_moments(const ExperimentConfig& cfg, const RunOptions& opt) {
  cfg.validate();
  RunSummary summary;
  const OperatorConfig base = detail::base_operator_config(cfg);

  const std::size_t total = cfg.n_list.size() * cfg.moment_x_list.size();
  std::vector<MomentReport> reports(total);
  parallel_for(total, opt.threads, [&](std::size_t idx) {
    const std::size_t ni = idx / cfg.moment_x_list.size();
    const std::size_t xi = idx % cfg.moment_x_list.size();
    reports[idx] = central_moments(base.with_n(cfg.n_list[ni]), cfg.moment_x_list[xi]);
  });

  CsvWriter csv({"n", "x", "m0", "m1", "m2", "mu1", "mu2", "paper_m1", "paper_mu2", "theta_n",
                 "delta_paper_m1", "delta_paper_mu1", "delta_paper_mu2", "delta_closed_m1",
                 "delta_closed_m2"});
  for (const MomentReport& r : reports) {
    if (std::fabs(r.raw[0] - 1.0) > 1e-12) {
      summary.hard_checks_ok = false;
      summary.hard_failures.push_back("normalization m0 != 1 at n=" + fmt_long(r.n) +
                                      " x=" + fmt_double(r.x));
    }
    for (int j = 1; j <= 2; ++j) {
      const double scale = std::max(1.0, std::fabs(r.raw[static_cast<std::size_t>(j)]));
      if (std::fabs(r.delta_closed[static_cast<std::size_t>(j)]) > 1e-9 * scale) {
        summary.hard_checks_ok = false;
        summary.hard_failures.push_back("closed form m" + std::to_string(j) +
                                        " disagrees with oracle at n=" + fmt_long(r.n) +
                                        " x=" + fmt_double(r.x));
      }
    }
    csv.add_row({fmt_long(r.n), fmt_double(r.x), fmt_double(r.raw[0]), fmt_double(r.raw[1]),
                 fmt_double(r.raw[2]), fmt_double(r.central[1]), fmt_double(r.central[2]),
                 fmt_double(r.paper_raw[1]), fmt_double(r.paper_central[2]),
                 fmt_double(r.theta_n), fmt_double(r.delta_paper_raw[1]),
                 fmt_double(r.delta_paper_central[1]), fmt_double(r.delta_paper_central[2]),
                 fmt_double(r.delta_closed[1]), fmt_double(r.delta_closed[2])});
  }
  const std::string path = detail::out_path(opt, "moments.csv");
  csv.write(path);
  summary.outputs.push_back(path);
  detail::write_meta(cfg, opt, "moments", nullptr, summary);
  return summary;
}

/// `certify`: Theorem 2-5 certificates over the configured sweep.
inline RunSummary run_certificates(const ExperimentConfig& cfg, const RunOptions& opt) {
  cfg.validate();
  RunSummary summary;
  const OperatorConfig base = detail::base_operator_config(cfg);
  const CertificateParams& cp = cfg.certificates;

  const auto wants = [&](const std::string& t) {
    for (const auto& name : cp.theorems) {
      if (name == t) return true;
    }
    return false;
  };

  struct Job {
    TheoremId theorem;
    std::size_t fi;
    long n;
    double x;
    double alpha = 0.0, m_lip = 0.0;
  };
  std::vector<Job> jobs;
  for (std::size_t fi = 0; fi < cfg.functions.size(); ++fi) {
    const TestFunction& f = cfg.functions[fi];
    const bool bounded = f.sup_norm().has_value();
    // one membership estimate per (f, alpha), shared by the whole sweep
    std::vector<double> m_lip(cp.t5_alphas.size(), 0.0);
    if (wants("T5") && bounded) {
      for (std::size_t ai = 0; ai < cp.t5_alphas.size(); ++ai) {
        const double est = lip_M_estimate(f, cp.t5_alphas[ai], cp.t5_alpha1, cp.t5_alpha2, 0.0,
                                          cp.t5_domain_hi, cp.t5_samples);
        m_lip[ai] = cp.t5_m_margin * est;
      }
    }
    for (long n : cfg.n_list) {
      for (double x : cp.x_list) {
        if (wants("T2")) jobs.push_back({TheoremId::T2, fi, n, x});
        if (wants("T3") && f.cb2_norms()) jobs.push_back({TheoremId::T3, fi, n, x});
        if (wants("T4") && bounded) jobs.push_back({TheoremId::T4, fi, n, x});
        if (wants("T5") && bounded && x > 0.0) {
          for (std::size_t ai = 0; ai < cp.t5_alphas.size(); ++ai) {
            jobs.push_back({TheoremId::T5, fi, n, x, cp.t5_alphas[ai], m_lip[ai]});
          }
        }
      }
    }
  }

  std::vector<BoundCertificate> certs(jobs.size());
  parallel_for(jobs.size(), opt.threads, [&](std::size_t i) {
    const Job& job = jobs[i];
    const TestFunction& f = cfg.functions[job.fi];
    const OperatorConfig op = base.with_n(job.n);
    switch (job.theorem) {
      case TheoremId::T2:
        certs[i] = certificate_T2(op, f, job.x, cp.domain);
        break;
      case TheoremId::T3:
        certs[i] = certificate_T3(op, f, job.x);
        break;
      case TheoremId::T4:
        certs[i] = certificate_T4(op, f, job.x, cp.domain);
        break;
      case TheoremId::T5:
        certs[i] = certificate_T5(op, f, job.alpha, cp.t5_alpha1, cp.t5_alpha2, job.m_lip,
                                  job.x, cp.t5_domain_hi, cp.t5_samples);
        break;
    }
  });

  CsvWriter csv({"theorem", "function", "n", "x", "alpha", "lhs", "rhs_paper", "rhs_oracle",
                 "pass_paper", "pass_oracle", "ratio_paper", "ratio_oracle"});
  nlohmann::json t4_summary = nlohmann::json::array();
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const BoundCertificate& c = certs[i];
    csv.add_row({theorem_name(c.theorem), cfg.functions[jobs[i].fi].label(), fmt_long(c.n),
                 fmt_double(c.x), fmt_double(jobs[i].alpha), fmt_double(c.lhs),
                 fmt_double(c.rhs_paper), fmt_double(c.rhs_oracle), detail::fmt_bool(c.pass_paper),
                 detail::fmt_bool(c.pass_oracle), fmt_double(c.ratio_paper),
                 fmt_double(c.ratio_oracle)});
    if (c.theorem != TheoremId::T4 && !c.pass_oracle) ++summary.cert_failures;
  }

  // Theorem 4 boundedness is a sweep property, judged per function.
  for (std::size_t fi = 0; fi < cfg.functions.size(); ++fi) {
    std::vector<BoundCertificate> per_f;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      if (jobs[i].theorem == TheoremId::T4 && jobs[i].fi == fi) per_f.push_back(certs[i]);
    }
    if (per_f.empty()) continue;
    const T4Boundedness verdict = t4_ratio_bounded(per_f);
    if (!verdict.bounded) ++summary.cert_failures;
    t4_summary.push_back({{"function", cfg.functions[fi].label()},
                          {"sup_ratio", verdict.sup_ratio},
                          {"median_ratio", verdict.median_ratio},
                          {"bounded", verdict.bounded}});
  }

  const std::string path = detail::out_path(opt, "certify.csv");
  csv.write(path);
  summary.outputs.push_back(path);
  detail::write_meta(cfg, opt, "certify",
                     nlohmann::json{{"t4_boundedness", t4_summary},
                                    {"cert_failures", summary.cert_failures}},
                     summary);
  return summary;
}

/// `converge`: Theorem 1 at desk scale; sup error on [0, A] per (f, n).
inline RunSummary run_converge(const ExperimentConfig& cfg, const RunOptions& opt) {
  cfg.validate();
  RunSummary summary;
  const OperatorConfig base = detail::base_operator_config(cfg);

  const std::size_t total = cfg.functions.size() * cfg.n_list.size();
  std::vector<double> sup(total);
  parallel_for(total, opt.threads, [&](std::size_t idx) {
    const std::size_t fi = idx / cfg.n_list.size();
    const std::size_t ni = idx % cfg.n_list.size();
    sup[idx] = sup_error_on_grid(base.with_n(cfg.n_list[ni]), cfg.functions[fi], cfg.x_max,
                                 cfg.x_points);
  });

  CsvWriter csv({"function", "n", "sup_error", "slope"});
  for (std::size_t fi = 0; fi < cfg.functions.size(); ++fi) {
    const TestFunction& f = cfg.functions[fi];
    std::vector<std::pair<double, double>> samples;
    for (std::size_t ni = 0; ni < cfg.n_list.size(); ++ni) {
      samples.emplace_back(static_cast<double>(cfg.n_list[ni]), sup[fi * cfg.n_list.size() + ni]);
    }
    const std::optional<double> slope = loglog_slope(samples);
    const std::string slope_text = slope ? fmt_double(*slope) : "";
    const bool is_constant_one =
        f.kind() == TestFunction::Kind::Monomial && f.degree() == 0 && f.scale() == 1.0;
    for (std::size_t ni = 0; ni < cfg.n_list.size(); ++ni) {
      const double err = sup[fi * cfg.n_list.size() + ni];
      if (!std::isfinite(err)) {
        summary.hard_checks_ok = false;
        summary.hard_failures.push_back("non-finite sup error for " + f.label());
      }
      if (is_constant_one && err > 1e-12) {
        summary.hard_checks_ok = false;
        summary.hard_failures.push_back("normalization violated: sup |L*(1)-1| = " +
                                        fmt_double(err) + " at n=" + fmt_long(cfg.n_list[ni]));
      }
      csv.add_row({f.label(), fmt_long(cfg.n_list[ni]), fmt_double(err), slope_text});
    }
  }
  const std::string path = detail::out_path(opt, "converge.csv");
  csv.write(path);
  summary.outputs.push_back(path);
  detail::write_meta(cfg, opt, "converge", nullptr, summary);
  return summary;
}

/// `weighted`: Theorem 6/7 tables plus the Lemma 3 norm witness.
inline RunSummary run_weighted(const ExperimentConfig& cfg, const RunOptions& opt) {
  cfg.validate();
  RunSummary summary;
  const OperatorConfig base = detail::base_operator_config(cfg);
  const double X = cfg.weighted.x_max;
  const long grid = cfg.weighted.grid_points;

  std::vector<std::string> skipped;
  std::vector<const TestFunction*> eligible;
  for (const TestFunction& f : cfg.functions) {
    if (f.in_c_rho_k() && f.taylor_envelope()) {
      eligible.push_back(&f);
    } else {
      skipped.push_back(f.label());
    }
  }

  CsvWriter csv({"n", "label", "weighted_error", "slope"});
  const auto emit = [&](const std::vector<WeightedRow>& rows,
                        const std::vector<std::pair<std::string, std::optional<double>>>& slopes,
                        bool keep_hypotheses) {
    for (const WeightedRow& row : rows) {
      const bool is_e = row.label.size() == 2 && row.label[0] == 'e';
      if (is_e && !keep_hypotheses) continue;
      std::string slope_text;
      for (const auto& [label, slope] : slopes) {
        if (label == row.label && slope) slope_text = fmt_double(*slope);
      }
      if (is_e && row.label == "e0" && row.weighted_error > 1e-12) {
        summary.hard_checks_ok = false;
        summary.hard_failures.push_back("||L* e0 - e0||_rho = " + fmt_double(row.weighted_error) +
                                        " at n=" + fmt_long(row.n));
      }
      csv.add_row({fmt_long(row.n), row.label, fmt_double(row.weighted_error), slope_text});
    }
  };

  bool first = true;
  for (const TestFunction* f : eligible) {
    const Theorem7Table table = theorem7_experiment(base, cfg.n_list, *f, X, grid);
    emit(table.rows, table.slopes, first);
    first = false;
  }

  const Lemma3Result lemma3 = lemma3_check(base, cfg.n_list, X, grid);
  std::vector<std::pair<double, double>> excess;
  for (std::size_t i = 0; i < lemma3.n_values.size(); ++i) {
    excess.emplace_back(static_cast<double>(lemma3.n_values[i]), lemma3.norms[i] - 1.0);
  }
  const std::optional<double> lemma3_slope = loglog_slope(excess);
  for (std::size_t i = 0; i < lemma3.n_values.size(); ++i) {
    csv.add_row({fmt_long(lemma3.n_values[i]), "lemma3_rho_norm", fmt_double(lemma3.norms[i]),
                 lemma3_slope ? fmt_double(*lemma3_slope) : ""});
  }

  const std::string path = detail::out_path(opt, "weighted.csv");
  csv.write(path);
  summary.outputs.push_back(path);
  detail::write_meta(cfg, opt, "weighted",
                     nlohmann::json{{"skipped_functions", skipped},
                                    {"lemma3_bounded", lemma3.bounded},
                                    {"lemma3_sup", lemma3.sup_value}},
                     summary);
  return summary;
}

}  // namespace jaklev
