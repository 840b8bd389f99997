#include "qhit_commands.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

void add_common(CLI::App& app, qhit::cli::RunConfig& cfg, std::string& mode, std::string& format, int& steps) {
  app.add_option("--n", cfg.n, "number of vertices");
  app.add_option("--m", cfg.m, "number of marked vertices (the last m)");
  app.add_option("--steps", steps, "maximum T");
  app.add_option("--grid", cfg.grid, "samples for continuous curves");
  app.add_option("--mode", mode, "simulate | closed | both");
  app.add_option("--out", cfg.out, "output file (default stdout)");
  app.add_option("--format", format, "csv | json");
  app.add_flag("--seedless", "no-op: the pipeline is deterministic");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace qhit::cli;

  CLI::App app{"Quantum hitting time of Szegedy walks on the complete graph"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string mode = "closed", format = "csv";
  int steps = -1;
  std::string chain_path, which, n_range, m_range, fault;

  auto* hit = app.add_subcommand("hit", "hitting time report");
  add_common(*hit, cfg, mode, format, steps);
  hit->add_option("--chain", chain_path, "JSON chain descriptor");

  auto* figure = app.add_subcommand("figure", "figure data (fig1: F(T), fig2: p_M(t))");
  add_common(*figure, cfg, mode, format, steps);
  figure->add_option("which", which, "fig1 | fig2")->required();
  figure->add_option("--chain", chain_path, "JSON chain descriptor");

  auto* sweep = app.add_subcommand("sweep", "closed-form sweep over n and m ranges");
  add_common(*sweep, cfg, mode, format, steps);
  sweep->add_option("--n-range", n_range, "e.g. 100..1000000:x10 or 10,20,30");
  sweep->add_option("--m-range", m_range, "e.g. 1..99");

  auto* verify = app.add_subcommand("verify", "run the invariant suite");
  add_common(*verify, cfg, mode, format, steps);
  verify->add_option("--inject-fault", fault, "negative control: row-sum");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    cfg.mode = parse_mode(mode);
    cfg.format = parse_format(format);
    if (steps >= 0) cfg.steps = steps;
    if (!chain_path.empty()) cfg.chain_path = chain_path;

    if (*hit) return cmd_hitting(cfg, std::cout, std::cerr);
    if (*figure) return cmd_figure(cfg, which, std::cout, std::cerr);
    if (*sweep) {
      if (n_range.empty()) n_range = std::to_string(cfg.n);
      if (m_range.empty()) m_range = std::to_string(cfg.m);
      return cmd_sweep(cfg, n_range, m_range, std::cout, std::cerr);
    }
    VerifyOptions opt;
    if (verify->count("--n")) opt.max_n = cfg.n;
    if (cfg.steps) opt.steps = *cfg.steps;
    if (!fault.empty()) {
      if (fault != "row-sum") throw usage_error("unknown fault '" + fault + "'");
      opt.inject_row_sum_fault = true;
    }
    return cmd_verify(cfg, opt, std::cout, std::cerr);
  } catch (const usage_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const qhit::error& e) {
    std::cerr << e.what() << "\n";
    if (e.code() == qhit::errc::no_crossing) return kExitNoCrossing;
    if (e.code() == qhit::errc::invalid_marking || e.code() == qhit::errc::invalid_size) return kExitUsage;
    return kExitVerifyFailed;
  }
}
