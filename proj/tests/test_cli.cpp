#include <gtest/gtest.h>
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

struct CliRun {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("normgeom_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

CliRun run_cli(const std::string& args, const std::string& name) {
  const fs::path dir = scratch_dir(name);
  const std::string cmd = std::string("cd ") + dir.string() + " && " + NORMGEOM_CLI_PATH + " " +
                          args + " > stdout.txt 2> stderr.txt";
  const int status = std::system(cmd.c_str());
  CliRun r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(dir / "stdout.txt");
  r.err = slurp(dir / "stderr.txt");
  return r;
}

std::string data(const std::string& file) { return std::string(NORMGEOM_DATA_DIR) + "/" + file; }

}  // namespace

TEST(Cli, ValidateBall) {
  const CliRun r = run_cli("validate " + data("mixed_example21_ball.json"), "validate_ball");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_TRUE(doc["valid"].get<bool>());
  EXPECT_EQ(doc["kind"], "ball");
  EXPECT_NEAR(doc["ball"]["area"].get<double>(), 2.57079632679, 1e-10);
}

TEST(Cli, ValidateReportsErrorCodes) {
  const CliRun broken = run_cli("validate " + data("broken_symmetry_ball.json"), "validate_broken");
  EXPECT_EQ(broken.exit_code, 1);
  EXPECT_NE(broken.err.find("NotSymmetric"), std::string::npos);
  const CliRun open = run_cli("validate " + data("non_closing_curve.json"), "validate_open");
  EXPECT_EQ(open.exit_code, 1);
  EXPECT_NE(open.err.find("NotClosed"), std::string::npos);
  const json diag = json::parse(open.err.substr(0, open.err.find('\n')));
  EXPECT_EQ(diag["level"], "error");
}

TEST(Cli, ValidateCurveAndPolygon) {
  EXPECT_EQ(run_cli("validate " + data("mixed_ball_curve.json"), "validate_curve").exit_code, 0);
  EXPECT_EQ(run_cli("validate " + data("mixed_ball_curve_explicit.json"), "validate_explicit").exit_code, 0);
  EXPECT_EQ(run_cli("validate " + data("pentagon_polygon.json"), "validate_poly").exit_code, 0);
}

TEST(Cli, AnalyzeExample) {
  const CliRun r = run_cli("analyze " + data("mixed_ball_curve.json"), "analyze");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const json doc = json::parse(r.out);
  const json& ledger = doc["ledger"];
  EXPECT_NEAR(ledger["L_star"].get<double>(), 13.58, 0.05);
  EXPECT_NEAR(ledger["A_WC_once"].get<double>(), -1.33, 0.02);
  EXPECT_NEAR(ledger["A_CWMS"].get<double>(), -0.48, 0.02);
  EXPECT_NEAR(ledger["A_U"].get<double>(), 2.57079632679, 1e-10);
  EXPECT_TRUE(doc["violations"].empty());
}

TEST(Cli, AnalyzeExplicitFormMatches) {
  const CliRun a = run_cli("analyze " + data("mixed_ball_curve.json"), "analyze_a");
  const CliRun b = run_cli("analyze " + data("mixed_ball_curve_explicit.json"), "analyze_b");
  ASSERT_EQ(b.exit_code, 0) << b.err;
  EXPECT_NEAR(json::parse(a.out)["ledger"]["L_star"].get<double>(),
              json::parse(b.out)["ledger"]["L_star"].get<double>(), 1e-8);
}

TEST(Cli, AnalyzeNonconvexSkipsLedger) {
  const CliRun r = run_cli("analyze " + data("nonconvex_curve.json"), "analyze_nonconvex");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_TRUE(doc["ledger"].is_null());
  EXPECT_TRUE(doc.contains("ledger_skipped"));
  EXPECT_GE(doc["minkowski_gap"]["value"].get<double>(), 0.0);
}

TEST(Cli, AnalyzeWithBallOverride) {
  const CliRun r = run_cli("analyze " + data("circle_multiple_curve.json") + " --ball square",
                        "analyze_override");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_NEAR(json::parse(r.out)["ball"]["area"].get<double>(), 4.0, 1e-12);
}

TEST(Cli, DecomposeWritesReportAndSvg) {
  const fs::path out = scratch_dir("decompose_out");
  const CliRun r = run_cli("decompose " + data("mixed_ball_curve.json") + " --svg --out " + out.string(),
                        "decompose");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_NEAR(doc["wigner_caustic"]["signed_area_raw"].get<double>(), -2.66564795414, 1e-9);
  EXPECT_NEAR(doc["cwms"]["signed_area"].get<double>(), -0.480780218983, 1e-9);
  EXPECT_EQ(json::parse(slurp(out / "decompose.json")), doc);
  const std::string svg = slurp(out / "decompose.svg");
  EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  EXPECT_NE(svg.find("id=\"WC\""), std::string::npos);
  const auto first = svg.find("<path d=\"");
  ASSERT_NE(first, std::string::npos);
  EXPECT_GT(svg.find('"', first + 9) - first, 100u);
}

TEST(Cli, Lhuilier) {
  const CliRun r = run_cli("lhuilier " + data("rectangle_polygon.json") + " --svg", "lhuilier");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_NEAR(doc["gap"].get<double>(), 4.0, 1e-10);
  EXPECT_FALSE(doc["violation"].get<bool>());
  EXPECT_TRUE(fs::exists(fs::temp_directory_path() / "normgeom_cli_lhuilier" / "lhuilier.svg"));
}

TEST(Cli, CorpusExitCodesAndDeterminism) {
  const CliRun a = run_cli("corpus --seed 42 --n 8", "corpus_a");
  const CliRun b = run_cli("corpus --seed 42 --n 8", "corpus_b");
  EXPECT_EQ(a.exit_code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(json::parse(a.out)["violation_count"], 0);
  const CliRun fault = run_cli("corpus --n 8 --inject-fault", "corpus_fault");
  EXPECT_EQ(fault.exit_code, 2);
  EXPECT_GT(json::parse(fault.out)["violation_count"].get<int>(), 0);
}

TEST(Cli, BadInvocations) {
  EXPECT_NE(run_cli("frobnicate", "bad_command").exit_code, 0);
  EXPECT_EQ(run_cli("analyze /nonexistent/file.json", "bad_file").exit_code, 1);
  EXPECT_EQ(run_cli("analyze " + data("mixed_example21_ball.json"), "bad_kind").exit_code, 1);
}

TEST(Cli, AnalyzeIsFast) {
  const auto start = std::chrono::steady_clock::now();
  const CliRun r = run_cli("analyze " + data("mixed_ball_curve.json"), "analyze_fast");
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_LT(seconds, 1.0);
}
