#include "qhit_commands.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace qhit;
using namespace qhit::cli;

namespace {

std::vector<std::vector<double>> parse_csv(const std::string& text, std::vector<std::string>* header = nullptr) {
  std::stringstream ss(text);
  std::string line;
  std::getline(ss, line);
  if (header) {
    std::stringstream hs(line);
    for (std::string h; std::getline(hs, h, ',');) header->push_back(h);
  }
  std::vector<std::vector<double>> rows;
  while (std::getline(ss, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

RunConfig config(int n, int m, Mode mode = Mode::closed) {
  RunConfig c;
  c.n = n;
  c.m = m;
  c.mode = mode;
  return c;
}

}  // namespace

TEST(ParseRange, Forms) {
  EXPECT_EQ(parse_range("7"), (std::vector<int>{7}));
  EXPECT_EQ(parse_range("3,5,9"), (std::vector<int>{3, 5, 9}));
  EXPECT_EQ(parse_range("1..4"), (std::vector<int>{1, 2, 3, 4}));
  EXPECT_EQ(parse_range("2..10:4"), (std::vector<int>{2, 6, 10}));
  EXPECT_EQ(parse_range("1000..1000000:x10"), (std::vector<int>{1000, 10000, 100000, 1000000}));
  EXPECT_TRUE(parse_range("5..3").empty());
  EXPECT_THROW(parse_range("a..3"), usage_error);
  EXPECT_THROW(parse_range("1..9:0"), usage_error);
  EXPECT_THROW(parse_range("0..9:x2"), usage_error);
}

TEST(ParseEnums, RejectUnknown) {
  EXPECT_EQ(parse_mode("both"), Mode::both);
  EXPECT_THROW(parse_mode("fast"), usage_error);
  EXPECT_THROW(parse_format("xml"), usage_error);
}

TEST(CmdHitting, HundredTwentyOneJson) {
  RunConfig cfg = config(100, 21, Mode::both);
  cfg.format = Format::json;
  std::ostringstream out, log;
  ASSERT_EQ(cmd_hitting(cfg, out, log), kExitOk);
  const auto j = nlohmann::json::parse(out.str());
  EXPECT_EQ(j["H"], 2);
  EXPECT_NEAR(j["Tstar"].get<double>(), 1.13, 0.01);
  EXPECT_EQ(j["H_simulated"], 2);
  EXPECT_NEAR(j["Tstar_simulated"].get<double>(), j["Tstar"].get<double>(), 1e-9);
  EXPECT_LT(j["max_F_discrepancy"].get<double>(), 1e-9);
  EXPECT_DOUBLE_EQ(j["threshold"].get<double>(), 0.79);
  EXPECT_NE(log.str().find("H = 2"), std::string::npos);
}

TEST(CmdHitting, CsvSingleRow) {
  std::ostringstream out, log;
  ASSERT_EQ(cmd_hitting(config(2, 1), out, log), kExitOk);
  std::stringstream ss(out.str());
  std::string head, row, extra;
  std::getline(ss, head);
  std::getline(ss, row);
  EXPECT_FALSE(std::getline(ss, extra) && !extra.empty());
  EXPECT_EQ(std::count(head.begin(), head.end(), ','), std::count(row.begin(), row.end(), ','));
  EXPECT_NE(head.find("Tstar"), std::string::npos);
  EXPECT_NE(row.find("closed"), std::string::npos);
}

TEST(CmdHitting, StepCapTooSmallIsNoCrossing) {
  RunConfig cfg = config(100, 21);
  cfg.steps = 1;
  std::ostringstream out, log;
  try {
    cmd_hitting(cfg, out, log);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::no_crossing);
  }
}

TEST(CmdHitting, InvalidMarkingIsUsageError) {
  std::ostringstream out, log;
  EXPECT_THROW(cmd_hitting(config(10, 10), out, log), usage_error);
  EXPECT_THROW(cmd_hitting(config(10, 0), out, log), usage_error);
  EXPECT_THROW(cmd_hitting(config(5000, 1, Mode::simulate), out, log), usage_error);
}

TEST(CmdHitting, ChainDescriptor) {
  const auto path = std::filesystem::temp_directory_path() / "qhit_chain_test.json";
  {
    std::ofstream f(path);
    f << R"({"n": 12, "graph": "complete", "marked": [2, 5, 11]})";
  }
  RunConfig cfg = config(0, 0, Mode::simulate);
  cfg.chain_path = path.string();
  cfg.format = Format::json;
  std::ostringstream out, log;
  ASSERT_EQ(cmd_hitting(cfg, out, log), kExitOk);
  const auto j = nlohmann::json::parse(out.str());
  EXPECT_EQ(j["n"], 12);
  EXPECT_EQ(j["m"], 3);
  EXPECT_EQ(j["H"], hitting_time(mark_last(complete_graph(12), 3)).H);
  std::filesystem::remove(path);

  cfg.chain_path = "/nonexistent/chain.json";
  EXPECT_THROW(cmd_hitting(cfg, out, log), usage_error);
}

TEST(ChainJson, RoundTrip) {
  const MarkovChain c = complete_graph(9).with_marked({3, 7});
  const MarkovChain back = chain_from_json(chain_to_json(c));
  EXPECT_EQ(back.n(), 9);
  EXPECT_EQ(back.marked(), c.marked());
  EXPECT_THROW(chain_from_json(nlohmann::json{{"n", 4}, {"graph", "cycle"}, {"marked", {1}}}), error);
}

TEST(CmdFigure, Fig2StartsAtMarkedFraction) {
  RunConfig cfg = config(100, 21);
  cfg.grid = 401;
  std::ostringstream out, log;
  ASSERT_EQ(cmd_figure(cfg, "fig2", out, log), kExitOk);
  std::vector<std::string> header;
  const auto rows = parse_csv(out.str(), &header);
  EXPECT_EQ(header, (std::vector<std::string>{"t", "pM"}));
  ASSERT_EQ(rows.size(), 401u);
  EXPECT_EQ(rows.front()[0], 0.0);
  EXPECT_NEAR(rows.front()[1], 0.21, 1e-12);
  EXPECT_DOUBLE_EQ(rows.back()[0], 20.0);

  // two local maxima per period pi/theta2 (bracket extremes of either sign)
  std::vector<double> peaks;
  for (std::size_t i = 1; i + 1 < rows.size(); ++i)
    if (rows[i][1] > rows[i - 1][1] && rows[i][1] >= rows[i + 1][1]) peaks.push_back(rows[i][0]);
  ASSERT_GE(peaks.size(), 4u);
  EXPECT_NEAR(peaks[0], 0.9338, 0.05);
  for (std::size_t i = 2; i < peaks.size(); ++i) EXPECT_NEAR(peaks[i] - peaks[i - 2], 4.7353, 0.06);
}

TEST(CmdFigure, Fig1CrossesThresholdNear113) {
  RunConfig cfg = config(100, 21);
  cfg.steps = 4;
  cfg.grid = 4001;
  std::ostringstream out, log;
  ASSERT_EQ(cmd_figure(cfg, "fig1", out, log), kExitOk);
  std::vector<std::string> header;
  const auto rows = parse_csv(out.str(), &header);
  EXPECT_EQ(header, (std::vector<std::string>{"T", "F", "threshold", "limiting"}));
  double crossing = -1.0;
  for (const auto& r : rows)
    if (r[1] >= r[2]) {
      crossing = r[0];
      break;
    }
  EXPECT_NEAR(crossing, 1.13, 0.01);
  EXPECT_NEAR(rows.front()[3], 31284.0 / 17700.0, 1e-12);
}

TEST(CmdFigure, BothModeColumnsAgree) {
  for (const std::string which : {"fig1", "fig2"}) {
    RunConfig cfg = config(30, 4, Mode::both);
    cfg.steps = 30;
    std::ostringstream out, log;
    ASSERT_EQ(cmd_figure(cfg, which, out, log), kExitOk);
    const auto rows = parse_csv(out.str());
    ASSERT_EQ(rows.size(), 31u);
    for (const auto& r : rows) EXPECT_NEAR(r[1], r[2], 1e-9);
  }
}

TEST(CmdFigure, Errors) {
  std::ostringstream out, log;
  EXPECT_THROW(cmd_figure(config(10, 2), "fig3", out, log), usage_error);
  RunConfig cfg = config(10, 2);
  cfg.grid = 1;
  EXPECT_THROW(cmd_figure(cfg, "fig1", out, log), usage_error);
}

TEST(CmdSweep, EmptyRangeIsUsageError) {
  std::ostringstream out, log;
  EXPECT_THROW(cmd_sweep(config(0, 0), "5..3", "1", out, log), usage_error);
  EXPECT_THROW(cmd_sweep(config(0, 0), "10", "10..20", out, log), usage_error);
}

TEST(CmdSweep, HundredAllMarkingsPeakAboveHalf) {
  std::ostringstream out, log;
  ASSERT_EQ(cmd_sweep(config(0, 0), "100", "1..99", out, log, 4), kExitOk);
  std::vector<std::string> header;
  const auto rows = parse_csv(out.str(), &header);
  ASSERT_EQ(rows.size(), 99u);
  const auto col = [&](const std::string& name) {
    return static_cast<std::size_t>(std::find(header.begin(), header.end(), name) - header.begin());
  };
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i][col("m")], double(i + 1));
    EXPECT_GT(rows[i][col("pM_tmax")], 0.5);
    EXPECT_LE(rows[i][col("t_max")], rows[i][col("H")]) << "m=" << i + 1;
  }
  EXPECT_EQ(rows[20][col("H")], 2.0);
}

TEST(CmdSweep, OutputIndependentOfThreadCount) {
  std::ostringstream a, b, log;
  cmd_sweep(config(0, 0), "10..200:10", "1..9", a, log, 1);
  cmd_sweep(config(0, 0), "10..200:10", "1..9", b, log, 8);
  EXPECT_EQ(a.str(), b.str());
}

TEST(CmdSweep, SimulatedColumnMatches) {
  std::ostringstream out, log;
  ASSERT_EQ(cmd_sweep(config(0, 0, Mode::both), "5..25:5", "1..4", out, log), kExitOk);
  std::vector<std::string> header;
  const auto rows = parse_csv(out.str(), &header);
  ASSERT_EQ(header.back(), "H_sim");
  for (const auto& r : rows) EXPECT_EQ(r[2], r.back());
}

TEST(CmdVerify, PassesByDefault) {
  RunConfig cfg;
  VerifyOptions opt;
  opt.max_n = 8;
  std::ostringstream out, log;
  EXPECT_EQ(cmd_verify(cfg, opt, out, log), kExitOk);
  const auto j = nlohmann::json::parse(out.str());
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_GE(j["checks"].size(), 15u);
}

TEST(CmdVerify, RowSumFaultIsCaught) {
  RunConfig cfg;
  VerifyOptions opt;
  opt.max_n = 4;
  opt.inject_row_sum_fault = true;
  std::ostringstream out, log;
  EXPECT_EQ(cmd_verify(cfg, opt, out, log), kExitVerifyFailed);
  const auto j = nlohmann::json::parse(out.str());
  EXPECT_FALSE(j["passed"].get<bool>());
  for (const auto& c : j["checks"]) EXPECT_EQ(c["passed"].get<bool>(), c["name"] != "chain.row_sum");
}

TEST(CmdHitting, ClosedModeHandlesVeryLargeN) {
  RunConfig cfg = config(100'000'000, 1);
  cfg.format = Format::json;
  std::ostringstream out, log;
  ASSERT_EQ(cmd_hitting(cfg, out, log), kExitOk);
  const auto j = nlohmann::json::parse(out.str());
  const double asym = cg::asymptotic_H(cg::CGParams::make(100'000'000, 1), cg::AsymptoticConstants::compute()).value;
  EXPECT_NEAR(j["Tstar"].get<double>(), asym, 1e-6 * asym);
}
