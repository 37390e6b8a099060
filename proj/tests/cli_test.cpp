#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

#include "spectral_lab/spectral_lab.hpp"

using namespace spectral_lab;

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args, const std::string& stdin_text = "") {
  const auto dir = std::filesystem::temp_directory_path();
  std::string cmd = std::string(SPECTRAL_LAB_CLI) + " " + args + " 2>/dev/null";
  if (!stdin_text.empty()) {
    const auto in = dir / "spectral_lab_cli_stdin.txt";
    std::ofstream(in) << stdin_text;
    cmd += " < " + in.string();
  }
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t k = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), k);
  const int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string trim(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
  return s;
}

}  // namespace

TEST(Cli, ConstructGraph6) {
  const auto r = run("construct --n 6 --format graph6");
  ASSERT_EQ(r.status, 0);
  const auto g = decode_graph6(trim(r.out));
  EXPECT_EQ(g.order(), 12);
  EXPECT_EQ(g.regular_degree(), 3);
  EXPECT_TRUE(is_connected(g));
  EXPECT_EQ(canonical_form(to_bipartite(g)), canonical_form(build_h2n(6)));
}

TEST(Cli, PerSubcommandDefaults) {
  EXPECT_EQ(decode_graph6(trim(run("construct").out)).order(), 12);
  const auto j = nlohmann::json::parse(run("profile --format json").out);
  EXPECT_EQ(j["config"]["n"], 20);
}

TEST(Cli, ConstructRejectsSmallN) { EXPECT_EQ(run("construct --n 5").status, 2); }

TEST(Cli, ConstructJsonRoundTrips) {
  const auto r = run("construct --n 9 --format json");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["config"]["n"], 9);
  EXPECT_EQ(bipartite_from_json(j), build_h2n(9));
}

TEST(Cli, SpectrumCompleteBipartite) {
  const auto r = run("spectrum --format text", encode_graph6(complete_bipartite(3, 3).to_graph()) + "\n");
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("a(G) = 3.000000000"), std::string::npos);
  EXPECT_NE(r.out.find("# config"), std::string::npos);
}

TEST(Cli, SpectrumPathFromJson) {
  const auto r = run("spectrum", R"({"n": 10, "edges": [[0,1],[1,2],[2,3],[3,4],[4,5],[5,6],[6,7],[7,8],[8,9]]})");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["a"].get<double>(), path_fiedler_closed_form(10), 1e-10);
  EXPECT_FALSE(j.contains("spectral_gap"));
}

TEST(Cli, SpectrumReportsSandwichAndGapForH12) {
  const auto r = run("spectrum", encode_graph6(build_h2n(6)));
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["sandwich"]["ok"].get<bool>());
  EXPECT_LE(std::abs(j["gap_minus_a"].get<double>()), 1e-9);
}

TEST(Cli, SpectrumDisconnectedIsFlagged) {
  const auto r = run("spectrum", encode_graph6(Graph(4, {{0, 1}, {2, 3}})));
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["a"].get<double>(), 0.0, 1e-12);
  EXPECT_TRUE(j.contains("warning"));
}

TEST(Cli, SpectrumRejectsGarbage) { EXPECT_EQ(run("spectrum", "not a graph!\n").status, 2); }

TEST(Cli, DescendIsDeterministicAndNeverBelowMinimum) {
  const auto a = run("descend --n 6 --seeds 100 --seed 7");
  ASSERT_EQ(a.status, 0);
  // identical apart from the config header, which echoes the worker count
  const auto b = run("descend --n 6 --seeds 100 --seed 7 --workers 2");
  EXPECT_EQ(b.out.substr(b.out.find('\n')), a.out.substr(a.out.find('\n')));
  const auto last = a.out.substr(a.out.rfind('\n', a.out.size() - 2) + 1);
  const auto summary = nlohmann::json::parse(last)["summary"];
  EXPECT_EQ(summary["below_h2n_value"], 0);
  EXPECT_EQ(summary["seeds"], 100);
  // every seed records its start
  int starts = 0;
  std::size_t pos = 0;
  while ((pos = a.out.find("\"step\":0,", pos)) != std::string::npos) ++starts, ++pos;
  EXPECT_EQ(starts, 100);
}

TEST(Cli, CertifySmallAndSeven) {
  const auto dir = std::filesystem::temp_directory_path() / "spectral_lab_cli_cert";
  std::filesystem::create_directories(dir);
  const auto out3 = (dir / "n3.json").string();
  EXPECT_EQ(run("certify --n 3 --format json --out " + out3).status, 0);
  const auto out7 = (dir / "n7.json").string();
  EXPECT_EQ(run("certify --n 7 --format json --out " + out7).status, 0);
  std::ifstream f(out7);
  const auto j = nlohmann::json::parse(f);
  EXPECT_EQ(j["classes"], 13);
  EXPECT_TRUE(std::filesystem::exists(out7 + ".classes.csv"));
  std::filesystem::remove_all(dir);
}

// The n = 6 matching claim fails (two classes share the maximum count), so
// certify reports it and exits nonzero.
TEST(Cli, CertifySixReportsTiedMatchingMaximum) {
  const auto dir = std::filesystem::temp_directory_path() / "spectral_lab_cli_cert6";
  std::filesystem::create_directories(dir);
  const auto out = (dir / "n6.json").string();
  EXPECT_EQ(run("certify --n 6 --format json --out " + out).status, 1);
  std::ifstream f(out);
  const auto j = nlohmann::json::parse(f);
  EXPECT_TRUE(j["minimizer"]["passed"].get<bool>());
  EXPECT_FALSE(j["equivalence"]["passed"].get<bool>());
  EXPECT_EQ(j["equivalence"]["argmax_pm_classes"], 2);
  std::filesystem::remove_all(dir);
}

TEST(Cli, CertifyEightNeedsAllowSlow) { EXPECT_EQ(run("certify --n 8").status, 2); }

TEST(Cli, AsymptoticsRows) {
  const auto r = run("asymptotics --n 60");
  ASSERT_EQ(r.status, 0);
  std::istringstream in(r.out);
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line[0] == 'n') continue;
    double v[5];
    ASSERT_EQ(std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf,%lf", &v[0], &v[1], &v[2], &v[3], &v[4]), 5);
    const double n = v[0];
    EXPECT_LE(v[2], v[1] * (1 + 1e-9));
    EXPECT_LE(v[1], v[3] * (1 + 1e-9));
    EXPECT_GE(v[4], 1 - 1e-9);
    EXPECT_LE(v[4], (n / (n - 4)) * (n / (n - 4)) * (1 + 1e-9));
    ++rows;
  }
  EXPECT_EQ(rows, 55);
  EXPECT_EQ(run("asymptotics --n 501").status, 2);
}

TEST(Cli, ProfileFindsRecurrence) {
  const auto r = run("profile --n 20");
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("a(n) = a(n-1) + a(n-2)"), std::string::npos);
  EXPECT_NE(r.out.find("20,16724"), std::string::npos);
}
