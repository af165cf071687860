#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "covertree/bench.hpp"
#include "covertree/cli.hpp"

using namespace covertree;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / "covertree_cli_test";
  fs::create_directories(dir);
  return dir;
}

std::string write(const std::string& name, const std::string& text) {
  const fs::path p = scratch() / name;
  std::ofstream(p) << text;
  return p.string();
}

}  // namespace

TEST_CASE("partitions subcommand") {
  auto r = cli({"partitions", "count", "4"});
  CHECK(r.code == 0);
  CHECK(r.out == "5\n");
  r = cli({"partitions", "list", "4"});
  CHECK(r.out == "4\n3 1\n2 2\n2 1 1\n1 1 1 1\n");
  r = cli({"--json", "partitions", "count", "100"});
  CHECK(nlohmann::json::parse(r.out)["count"] == "190569292");
}

TEST_CASE("solve subcommands") {
  const auto tiny = write("tiny.sc", "3 3\n2 1 2\n2 2 3\n1 3\n");
  auto r = cli({"solve", "setcover", "--method", "dp", tiny});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["optimum"] == 2);
  CHECK(j["method"] == "dp");
  CHECK(j.contains("elapsed_ms"));

  r = cli({"solve", "setcover", "--method", "ktree", "--eps", "1", tiny});
  CHECK(nlohmann::json::parse(r.out)["optimum"] == 2);

  const auto infeasible = write("gap.sc", "3 1\n1 1\n");
  r = cli({"solve", "setcover", "--method", "dp", infeasible});
  CHECK(r.code == 1);
  CHECK(nlohmann::json::parse(r.out)["optimum"] == "infeasible");

  const auto partial = write("t.psc", "p 2\n4 3\n2 1 2\n1 3\n1 4\n");
  r = cli({"solve", "partial", "--method", "ktree", partial});
  CHECK(nlohmann::json::parse(r.out)["optimum"] == 1);
  r = cli({"solve", "partial", "--method", "dp", partial});
  CHECK(nlohmann::json::parse(r.out)["optimum"] == 1);
}

TEST_CASE("ktree solve") {
  const auto path = write("path5.graph", "5 4 u\n1 2\n2 3\n3 4\n4 5\n");
  const auto star = write("star4.graph", "5 4 u\n1 2\n1 3\n1 4\n1 5\n");
  auto r = cli({"ktree", "solve", "--backend", "brute", path, star});
  CHECK(r.code == 0);
  CHECK(r.out == "no\n");
  r = cli({"ktree", "solve", "--backend", "algebraic", star, path});
  CHECK(r.out == "no\n");
  r = cli({"ktree", "solve", "--backend", "color", "--anchor", "1", star, star});
  CHECK(r.out == "yes\n");
}

TEST_CASE("reduce writes graphs that read back") {
  const auto tiny = write("two.sc", "2 2\n1 1\n1 2\n");
  const auto g = (scratch() / "h.graph").string();
  const auto t = (scratch() / "t.tree").string();
  auto r = cli({"--json", "reduce", "--mode", "undirected", "--g", "2", "--alpha", "1,1", tiny, g, t});
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["host_vertices"] == 17);
  r = cli({"ktree", "solve", "--brute-limit", "100", g, t});
  CHECK(r.out == "yes\n");
  r = cli({"reduce", "--mode", "directed", "--g", "2", "--alpha", "2", tiny, g, t});
  REQUIRE(r.code == 0);
  r = cli({"ktree", "solve", "--anchor", "6", "--class-constrained", g, t});
  CHECK(r.out == "no\n");
}

TEST_CASE("usage errors exit with 2") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"partitions", "count"}).code == 2);
  CHECK(cli({"solve", "setcover", "--method", "magic", "x.sc"}).code == 2);
  CHECK(cli({"solve", "setcover", (scratch() / "missing.sc").string()}).code == 2);
  const auto bad = write("bad.sc", "2 1\n1 5\n");
  const auto r = cli({"solve", "setcover", bad});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 2: element 5 out of range") != std::string::npos);
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("outputs are byte-identical for fixed seeds") {
  const auto a = cli({"gen", "--n", "8", "--m", "6", "--max-set-size", "3", "--seed", "7"});
  const auto b = cli({"gen", "--n", "8", "--m", "6", "--max-set-size", "3", "--seed", "7"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto inst = write("gen.sc", cli({"gen", "--seed", "3", "--feasible"}).out);
  const std::vector<std::string> args{"--no-timing", "solve", "setcover", "--method", "ktree", "--g", "2", inst};
  CHECK(cli(args).out == cli(args).out);
  const std::vector<std::string> bench{"--no-timing", "bench", "--count", "4", "--methods", "dp,ktree-brute"};
  CHECK(cli(bench).out == cli(bench).out);
}

TEST_CASE("COVERTREE_SEED sets the default seed") {
  ::setenv("COVERTREE_SEED", "7", 1);
  const auto fromEnv = cli({"gen"});
  ::unsetenv("COVERTREE_SEED");
  CHECK(fromEnv.out == cli({"gen", "--seed", "7"}).out);
  ::setenv("COVERTREE_SEED", "seven", 1);
  CHECK(cli({"gen"}).code == 2);
  ::unsetenv("COVERTREE_SEED");
}

TEST_CASE("bench suite") {
  BenchConfig cfg;
  cfg.count = 20;
  cfg.methods = {"dp", "ktree-brute"};
  const auto result = bench_suite(cfg);
  CHECK(result.rows.size() == 40);
  CHECK(result.disagreements == 0);
  for (std::size_t i = 0; i < result.rows.size(); ++i) CHECK(result.rows[i].instance == static_cast<int>(i / 2));
  const std::string csv = bench_csv(result);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 41);
  CHECK(result.summary["methods"]["dp"].contains("median_ms"));

  BenchConfig capped;
  capped.count = 3;
  capped.nMin = capped.nMax = 8;
  capped.mMin = capped.mMax = 4;
  capped.maxSetSize = 1;
  capped.g = 2;
  capped.groupCap = 1;
  capped.repetitions = 3;
  const auto skipped = bench_suite(capped);
  int caps = 0;
  for (const auto& row : skipped.rows) caps += row.answer == "skipped: cap" ? 1 : 0;
  CHECK(caps == 3);
  CHECK(skipped.disagreements == 0);

  BenchConfig partial;
  partial.count = 10;
  partial.pRule = "uniform";
  partial.methods = {"dp", "ktree-brute", "ktree-algebraic"};
  partial.nMax = 5;
  CHECK(bench_suite(partial).disagreements == 0);

  BenchConfig broken;
  broken.repetitions = 0;
  CHECK_THROWS_AS(bench_suite(broken), std::invalid_argument);
  broken.repetitions = 1;
  broken.methods = {"oracle"};
  CHECK_THROWS_AS(bench_suite(broken), std::invalid_argument);
}
