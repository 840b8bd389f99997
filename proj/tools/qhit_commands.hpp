#pragma once

// Subcommands of the qhit command-line tool. Each command writes data to `out` (or the file named
// by RunConfig::out) and a short human summary to `log`, and returns the process exit code.

#include <qhit/qhit.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace qhit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNoCrossing = 3;

// Largest n for which the walk is simulated (state vectors hold n^2 amplitudes).
inline constexpr int kMaxSimulatedVertices = 3000;

enum class Mode { simulate, closed, both };
enum class Format { csv, json };

struct RunConfig {
  int n = 100;
  int m = 1;
  Mode mode = Mode::closed;
  std::optional<int> steps;
  int grid = 401;
  std::string out;
  Format format = Format::csv;
  std::optional<std::string> chain_path;
};

class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Mode parse_mode(const std::string& s) {
  if (s == "simulate") return Mode::simulate;
  if (s == "closed") return Mode::closed;
  if (s == "both") return Mode::both;
  throw usage_error("unknown mode '" + s + "' (expected simulate, closed or both)");
}

inline Format parse_format(const std::string& s) {
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  throw usage_error("unknown format '" + s + "' (expected csv or json)");
}

/// Accepts "a", "a,b,c", "a..b", "a..b:step" and "a..b:xfactor" (geometric).
inline std::vector<int> parse_range(const std::string& text) {
  auto to_int = [&](const std::string& s) {
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(s, &pos);
    } catch (const std::exception&) {
      throw usage_error("bad integer '" + s + "' in range '" + text + "'");
    }
    if (pos != s.size() || v < 0 || v > 100'000'000) throw usage_error("bad integer '" + s + "' in range '" + text + "'");
    return static_cast<int>(v);
  };

  std::vector<int> out;
  if (text.empty()) return out;
  if (auto dots = text.find(".."); dots != std::string::npos) {
    const int lo = to_int(text.substr(0, dots));
    std::string rest = text.substr(dots + 2);
    int step = 1;
    bool geometric = false;
    if (auto colon = rest.find(':'); colon != std::string::npos) {
      std::string s = rest.substr(colon + 1);
      rest = rest.substr(0, colon);
      if (!s.empty() && s.front() == 'x') {
        geometric = true;
        s.erase(0, 1);
      }
      step = to_int(s);
      if (step < (geometric ? 2 : 1)) throw usage_error("bad step in range '" + text + "'");
    }
    const int hi = to_int(rest);
    if (geometric && lo == 0) throw usage_error("geometric range must start above 0");
    for (long long v = lo; v <= hi; v = geometric ? v * step : v + step) out.push_back(static_cast<int>(v));
    return out;
  }
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(to_int(item));
  return out;
}

namespace detail {

// (n, m) without building the chain when no descriptor is given; closed forms need nothing else.
inline std::pair<int, int> chain_size(const RunConfig& cfg);

inline MarkovChain load_chain(const RunConfig& cfg) {
  if (cfg.chain_path) {
    std::ifstream in(*cfg.chain_path);
    if (!in) throw usage_error("cannot open chain descriptor " + *cfg.chain_path);
    nlohmann::json j;
    try {
      in >> j;
      return chain_from_json(j);
    } catch (const nlohmann::json::exception& e) {
      throw usage_error(std::string("malformed chain descriptor: ") + e.what());
    } catch (const error& e) {
      throw usage_error(e.what());
    }
  }
  const auto [n, m] = chain_size(cfg);
  return mark_last(complete_graph(n), m);
}

inline std::pair<int, int> chain_size(const RunConfig& cfg) {
  if (cfg.chain_path) {
    const MarkovChain chain = load_chain(cfg);
    return {chain.n(), chain.m()};
  }
  if (cfg.n < 2) throw usage_error("--n must be at least 2");
  if (cfg.m < 1 || cfg.m >= cfg.n) throw usage_error("--m must satisfy 1 <= m < n");
  return {cfg.n, cfg.m};
}

// Runs `write` against the --out file if given, otherwise against `fallback`.
template <class Fn>
void with_output(const RunConfig& cfg, std::ostream& fallback, Fn&& write) {
  if (cfg.out.empty()) {
    write(fallback);
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw usage_error("cannot write " + cfg.out);
  write(file);
}

inline void require_simulable(int n) {
  if (n > kMaxSimulatedVertices)
    throw usage_error("simulation is limited to n <= " + std::to_string(kMaxSimulatedVertices) +
                      "; use --mode closed");
}

inline nlohmann::json number(double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(); }

}  // namespace detail

/// Hitting-time report: H, Tstar, threshold, limiting F and, in `both` mode, the largest gap
/// between directly simulated and closed-form F.
inline int cmd_hitting(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  const auto [n, m] = detail::chain_size(cfg);
  if (m < 1) throw usage_error("chain has no marked vertices");
  if (cfg.mode != Mode::closed) detail::require_simulable(n);

  nlohmann::json report{{"n", n}, {"m", m}, {"threshold", 1.0 - static_cast<double>(m) / n}};
  report["mode"] = cfg.mode == Mode::closed ? "closed" : cfg.mode == Mode::simulate ? "simulate" : "both";

  std::optional<HittingReport> closed, simulated;
  std::optional<WalkAnalysis> analysis;
  if (cfg.mode != Mode::simulate) closed = cg::hitting_time_closed(cg::CGParams::make(n, m), cfg.steps);
  if (cfg.mode != Mode::closed) {
    analysis = analyze(detail::load_chain(cfg));
    simulated = hitting_time(analysis->coeffs, n, m, cfg.steps);
  }

  const HittingReport& primary = closed ? *closed : *simulated;
  report["H"] = primary.H;
  report["Tstar"] = primary.Tstar;
  report["limiting_F"] = primary.limiting;

  if (closed && simulated) {
    const cg::CGParams params = cg::CGParams::make(n, m);
    const int horizon = std::max(2 * primary.H, 10);
    const EvolutionTrace trace = evolve_direct(analysis->ops, analysis->psi0, horizon);
    double gap = 0.0;
    for (const auto& row : trace.rows) gap = std::max(gap, std::abs(row.F - cg::closed_F(params, row.t)));
    report["H_simulated"] = simulated->H;
    report["Tstar_simulated"] = simulated->Tstar;
    report["H_closed"] = closed->H;
    report["max_F_discrepancy"] = gap;
    report["discrepancy_horizon"] = horizon;
  }

  detail::with_output(cfg, out, [&](std::ostream& os) {
    if (cfg.format == Format::json) {
      os << report.dump(2) << '\n';
      return;
    }
    std::vector<std::string> header;
    for (auto it = report.begin(); it != report.end(); ++it) header.push_back(it.key());
    CsvWriter csv(os, header);
    for (auto it = report.begin(); it != report.end(); ++it) {
      if (it->is_number_float()) csv.cell(it->get<double>());
      else if (it->is_number_integer()) csv.cell(it->get<long long>());
      else csv.cell(it->get<std::string>());
    }
    csv.end_row();
  });

  log << "n = " << n << ", m = " << m << "\n"
      << "threshold 1-m/n = " << format_double(1.0 - static_cast<double>(m) / n) << "\n"
      << "H = " << primary.H << "\n"
      << "Tstar = " << format_double(primary.Tstar) << "\n"
      << "limiting F = " << format_double(primary.limiting) << "\n";
  if (report.contains("max_F_discrepancy"))
    log << "max |F_sim - F_closed| = " << format_double(report["max_F_discrepancy"].get<double>()) << "\n";
  return kExitOk;
}

/// Figure data. fig1: T,F,threshold,limiting. fig2: t,pM. Closed mode samples `grid` points on
/// [0, steps]; simulate/both produce integer-time rows from the walk itself.
inline int cmd_figure(const RunConfig& cfg, const std::string& which, std::ostream& out, std::ostream& log) {
  if (which != "fig1" && which != "fig2") throw usage_error("figure must be fig1 or fig2");
  if (cfg.grid < 2) throw usage_error("--grid must be at least 2");
  const int steps = cfg.steps.value_or(20);
  if (steps < 1) throw usage_error("--steps must be at least 1");
  const auto [n, m] = detail::chain_size(cfg);
  const cg::CGParams params = cg::CGParams::make(n, m);
  const double threshold = params.threshold();
  const double limiting = cg::limiting_F(params);
  const bool fig1 = which == "fig1";

  std::optional<EvolutionTrace> trace;
  if (cfg.mode != Mode::closed) {
    detail::require_simulable(n);
    const MarkovChain chain = detail::load_chain(cfg);
    const AbsorbingChain absorbing = absorb(chain);
    trace = evolve_direct(WalkOperators(absorbing), initial_state(chain), steps);
  }

  std::vector<std::string> header = fig1 ? std::vector<std::string>{"T", "F"} : std::vector<std::string>{"t", "pM"};
  if (cfg.mode == Mode::both) header.push_back(fig1 ? "F_sim" : "pM_sim");
  if (fig1) {
    header.push_back("threshold");
    header.push_back("limiting");
  }

  nlohmann::json rows = nlohmann::json::array();
  auto emit = [&](double t, double closed_value, std::optional<double> sim_value) {
    nlohmann::json row;
    row[header[0]] = t;
    row[header[1]] = sim_value && cfg.mode == Mode::simulate ? *sim_value : closed_value;
    if (cfg.mode == Mode::both) row[header[2]] = *sim_value;
    if (fig1) {
      row["threshold"] = threshold;
      row["limiting"] = limiting;
    }
    rows.push_back(std::move(row));
  };

  if (trace) {
    for (const auto& r : trace->rows)
      emit(r.t, fig1 ? cg::closed_F(params, r.t) : cg::closed_pM(params, r.t), fig1 ? r.F : r.pM);
  } else {
    for (int i = 0; i < cfg.grid; ++i) {
      const double t = steps * static_cast<double>(i) / (cfg.grid - 1);
      emit(t, fig1 ? cg::closed_F(params, t) : cg::closed_pM(params, t), std::nullopt);
    }
  }

  detail::with_output(cfg, out, [&](std::ostream& os) {
    if (cfg.format == Format::json) {
      os << rows.dump(1) << '\n';
      return;
    }
    CsvWriter csv(os, header);
    for (const auto& row : rows) {
      for (const auto& h : header) csv.cell(row[h].get<double>());
      csv.end_row();
    }
  });
  log << which << ": " << rows.size() << " rows for n = " << n << ", m = " << m << "\n";
  return kExitOk;
}

struct SweepRow {
  int n = 0, m = 0;
  int H = 0;
  double Tstar = 0, t_max = 0, pM_tmax = 0, pM_Tstar = 0;
  double H_asym = 0, H_rel_err = 0, t_max_asym = 0, pM_tmax_asym = 0, pM_H_asym = 0;
  std::optional<int> H_sim;
};

inline SweepRow sweep_row(int n, int m, Mode mode, const cg::AsymptoticConstants& consts) {
  const cg::CGParams p = cg::CGParams::make(n, m);
  SweepRow r;
  r.n = n;
  r.m = m;
  const HittingReport hit = cg::hitting_time_closed(p);
  r.H = hit.H;
  r.Tstar = hit.Tstar;
  r.t_max = cg::t_max(p);
  r.pM_tmax = cg::closed_pM(p, r.t_max);
  r.pM_Tstar = cg::closed_pM(p, r.Tstar);
  r.H_asym = cg::asymptotic_H(p, consts).value;
  r.H_rel_err = std::abs(r.Tstar - r.H_asym) / r.Tstar;
  r.t_max_asym = cg::t_max_asymptotic(p);
  const auto probs = cg::asymptotic_probabilities(p, consts);
  r.pM_tmax_asym = probs.at_tmax;
  r.pM_H_asym = probs.at_hitting;
  if (mode != Mode::closed) r.H_sim = hitting_time(mark_last(complete_graph(n), m)).H;
  return r;
}

/// One row per (n, m) pair with 1 <= m < n, in (n, m) order. Rows are computed in parallel and
/// written by a single writer.
inline int cmd_sweep(const RunConfig& cfg, const std::string& n_range, const std::string& m_range,
                     std::ostream& out, std::ostream& log, unsigned threads = 0) {
  std::vector<int> ns = parse_range(n_range), ms = parse_range(m_range);
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  std::sort(ms.begin(), ms.end());
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  std::vector<std::pair<int, int>> jobs;
  for (int n : ns)
    for (int m : ms)
      if (n >= 2 && m >= 1 && m < n) jobs.emplace_back(n, m);
  if (jobs.empty()) throw usage_error("sweep range is empty (need n >= 2 and 1 <= m < n)");
  if (cfg.mode != Mode::closed) detail::require_simulable(ns.back());

  const auto consts = cg::AsymptoticConstants::compute();
  std::vector<SweepRow> rows(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++)
      rows[i] = sweep_row(jobs[i].first, jobs[i].second, cfg.mode, consts);
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(jobs.size()));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  std::vector<std::string> header{"n",       "m",        "H",      "Tstar",     "t_max",      "pM_tmax",
                                  "pM_Tstar", "H_asym",  "H_rel_err", "t_max_asym", "pM_tmax_asym", "pM_H_asym"};
  if (cfg.mode != Mode::closed) header.push_back("H_sim");

  detail::with_output(cfg, out, [&](std::ostream& os) {
    if (cfg.format == Format::json) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : rows) {
        nlohmann::json j{{"n", r.n},           {"m", r.m},           {"H", r.H},
                         {"Tstar", r.Tstar},   {"t_max", r.t_max},   {"pM_tmax", r.pM_tmax},
                         {"pM_Tstar", r.pM_Tstar}, {"H_asym", r.H_asym}, {"H_rel_err", r.H_rel_err},
                         {"t_max_asym", r.t_max_asym}, {"pM_tmax_asym", r.pM_tmax_asym},
                         {"pM_H_asym", r.pM_H_asym}};
        if (r.H_sim) j["H_sim"] = *r.H_sim;
        arr.push_back(std::move(j));
      }
      os << arr.dump(1) << '\n';
      return;
    }
    CsvWriter csv(os, header);
    for (const auto& r : rows) {
      csv.cell(r.n).cell(r.m).cell(r.H).cell(r.Tstar).cell(r.t_max).cell(r.pM_tmax).cell(r.pM_Tstar);
      csv.cell(r.H_asym).cell(r.H_rel_err).cell(r.t_max_asym).cell(r.pM_tmax_asym).cell(r.pM_H_asym);
      if (r.H_sim) csv.cell(*r.H_sim);
      csv.end_row();
    }
  });
  log << "sweep: " << rows.size() << " rows\n";
  return kExitOk;
}

struct CheckResult {
  std::string name;
  bool passed = true;
  double worst = 0.0;      // worst observed error
  double tolerance = 0.0;  // pass iff worst < tolerance
  std::string detail;
};

struct VerifyOptions {
  int max_n = 16;   // chains up to this size are checked
  int steps = 25;   // time horizon for oracle comparisons
  bool inject_row_sum_fault = false;
};

/// Runs the module invariants over complete graphs with 2 <= n <= max_n and every marking.
inline std::vector<CheckResult> run_checks(const VerifyOptions& opt) {
  std::vector<CheckResult> checks;
  auto track = [&](const std::string& name, double tol) -> CheckResult& {
    for (auto& c : checks)
      if (c.name == name) return c;
    checks.push_back({name, true, 0.0, tol, ""});
    return checks.back();
  };
  auto record = [](CheckResult& c, double err, const std::string& where) {
    if (!(err < c.tolerance) && c.passed) c.detail = where + ": error " + format_double(err);
    if (!(err < c.tolerance)) c.passed = false;
    if (!(err <= c.worst)) c.worst = err;
  };

  // negative-control hook: the row-sum check runs on a perturbed matrix when requested
  {
    Matrix P = complete_graph(std::max(opt.max_n, 2)).P();
    if (opt.inject_row_sum_fault) P.row(0) *= 1.01;
    auto& c = track("chain.row_sum", 0.5);
    const auto violations = chain_violations(P, false);
    record(c, violations.empty() ? 0.0 : 1.0, violations.empty() ? "" : violations.front());
    double worst = 0.0;
    for (Eigen::Index x = 0; x < P.rows(); ++x) worst = std::max(worst, std::abs(P.row(x).sum() - 1.0));
    c.worst = worst;
  }

  const auto consts = cg::AsymptoticConstants::compute();
  {
    auto& c = track("constants.x_half", 1e-12);
    record(c, std::abs(std::sin(consts.x_half) / consts.x_half - 0.5), "sin(x)/x = 1/2");
  }

  for (int n = 2; n <= opt.max_n; ++n) {
    const MarkovChain base = complete_graph(n);
    for (int m = 0; m < n; ++m) {
      const std::string where = "n=" + std::to_string(n) + " m=" + std::to_string(m);
      const MarkovChain chain = mark_last(base, m);
      record(track("chain.symmetry", 0.5), chain_violations(chain.P()).empty() ? 0.0 : 1.0, where);

      const AbsorbingChain absorbing = absorb(chain);
      const WalkAnalysis wa = analyze(chain);
      const WalkOperators& ops = wa.ops;

      double iso = 0.0;
      for (int x = 0; x < n; ++x) {
        CVector e = CVector::Zero(n);
        e(x) = 1.0;
        iso = std::max(iso, (ops.apply_A_t(ops.apply_A(e)) - e).cwiseAbs().maxCoeff());
        iso = std::max(iso, (ops.apply_B_t(ops.apply_B(e)) - e).cwiseAbs().maxCoeff());
      }
      record(track("ops.isometry", 1e-12), iso, where);

      if (n <= dense::kMaxDenseVertices) {
        const Matrix U = dense::U(absorbing);
        const Eigen::Index N = U.rows();
        record(track("ops.dense_unitarity", 1e-10),
               (U.transpose() * U - Matrix::Identity(N, N)).cwiseAbs().maxCoeff(), where);
        CVector v(N);
        for (Eigen::Index i = 0; i < N; ++i) v(i) = Complex(std::sin(i + 1.0), std::cos(3.0 * i));
        v.normalize();
        record(track("ops.matrix_free_vs_dense", 1e-12),
               (ops.evolve_step(v) - U.cast<Complex>() * v).cwiseAbs().maxCoeff(), where);

        std::vector<Complex> expected;
        for (int j = wa.spectrum.k; j < n; ++j) {
          expected.push_back(std::polar(1.0, 2.0 * wa.spectrum.triples[j].theta));
          expected.push_back(std::polar(1.0, -2.0 * wa.spectrum.triples[j].theta));
        }
        const auto match = dense::match_eigenvalues(U, expected);
        record(track("spectral.dense_eigenvalues", 1e-8), std::max(match.max_expected_error, match.max_unit_error),
               where);
      }

      const Discriminant disc = discriminant(absorbing);
      double sv = 0.0;
      for (const auto& t : wa.spectrum.triples) {
        sv = std::max(sv, (disc.C * t.nu - t.lambda * t.mu).norm());
        sv = std::max(sv, (disc.C.transpose() * t.mu - t.lambda * t.nu).norm());
      }
      record(track("spectral.singular_triples", 1e-10), sv, where);

      const WalkEigenpairs pairs = walk_eigenpairs(ops, wa.spectrum);
      double res = 0.0;
      for (const auto& p : pairs.rotational) {
        res = std::max(res, (ops.evolve_step(p.plus) - p.eigenvalue_plus() * p.plus).norm());
        res = std::max(res, (ops.evolve_step(p.minus) - p.eigenvalue_minus() * p.minus).norm());
      }
      for (const auto& f : pairs.fixed) res = std::max(res, (ops.evolve_step(f) - f).norm());
      record(track("spectral.eigenpair_residual", 1e-9), res, where);

      const double psi1_norm2 = wa.psi1.amps().squaredNorm();
      record(track("sim.coefficient_completeness", 1e-10), std::abs(wa.coeffs.total_weight() + psi1_norm2 - 1.0),
             where);
      record(track("sim.psi1_invariant", 1e-9), (ops.evolve_step(wa.psi1.amps()) - wa.psi1.amps()).norm(), where);

      const EvolutionTrace trace = evolve_direct(ops, wa.psi0, opt.steps);
      double three_way = 0.0, norm_drift = 0.0;
      CVector psi = wa.psi0.amps();
      for (const auto& row : trace.rows) {
        if (row.t > 0) psi = ops.evolve_step(psi);
        norm_drift = std::max(norm_drift, std::abs(psi.norm() - 1.0));
        const double spectral = (wa.state_at(row.t).amps() - wa.psi0.amps()).squaredNorm();
        const double cheb = dist2_chebyshev(wa.coeffs, row.t);
        three_way = std::max({three_way, std::abs(row.dist2 - spectral), std::abs(row.dist2 - cheb),
                              std::abs(spectral - cheb)});
      }
      record(track("sim.dist2_three_way", 1e-9), three_way, where);
      record(track("sim.norm_conservation", 1e-9), norm_drift, where);

      if (m == 0) continue;
      const cg::CGParams params = cg::CGParams::make(n, m);
      double dp = 0.0, dF = 0.0;
      for (const auto& row : trace.rows) {
        dp = std::max(dp, std::abs(row.pM - cg::closed_pM(params, row.t)));
        dF = std::max(dF, std::abs(row.F - cg::closed_F(params, row.t)));
      }
      record(track("oracle.pM", 1e-9), dp, where);
      record(track("oracle.F", 1e-9), dF, where);
      record(track("cg.psi1_closed", 1e-10),
             (wa.psi1.amps() - cg::eigen1_component_closed(params).amps()).cwiseAbs().maxCoeff(), where);

      const HittingReport sim = hitting_time(wa.coeffs, n, m);
      const HittingReport closed = cg::hitting_time_closed(params);
      const double target = sim.threshold - kCrossingTolerance;
      const bool bracket =
          F_of_T(wa.coeffs, sim.H) >= target && (sim.H == 0 || F_of_T(wa.coeffs, sim.H - 1) < target);
      record(track("hitting.bracket", 0.5), bracket ? 0.0 : 1.0, where);
      record(track("hitting.closed_vs_simulated", 0.5), sim.H == closed.H ? 0.0 : 1.0, where);
    }
  }
  return checks;
}

inline int cmd_verify(const RunConfig& cfg, const VerifyOptions& opt, std::ostream& out, std::ostream& log) {
  if (opt.max_n < 2) throw usage_error("--n must be at least 2 for verify");
  if (opt.steps < 1) throw usage_error("--steps must be at least 1");
  const auto checks = run_checks(opt);
  bool all = true;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks) {
    all = all && c.passed;
    arr.push_back({{"name", c.name},
                   {"passed", c.passed},
                   {"worst_error", detail::number(c.worst)},
                   {"tolerance", c.tolerance},
                   {"detail", c.detail}});
  }
  nlohmann::json report{{"passed", all}, {"max_n", opt.max_n}, {"steps", opt.steps}, {"checks", arr}};
  detail::with_output(cfg, out, [&](std::ostream& os) { os << report.dump(2) << '\n'; });
  for (const auto& c : checks)
    log << (c.passed ? "PASS " : "FAIL ") << c.name << " (worst " << format_double(c.worst) << ")"
        << (c.passed ? "" : " " + c.detail) << "\n";
  return all ? kExitOk : kExitVerifyFailed;
}

}  // namespace qhit::cli
