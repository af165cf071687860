#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace covertree {

struct BenchConfig {
  std::string suite = "default";
  int count = 20;
  int nMin = 4, nMax = 8;
  int mMin = 3, mMax = 6;
  int maxSetSize = 3;
  /// "none" solves Set Cover; "uniform" draws p in [1, n]; "n" uses p = n.
  std::string pRule = "none";
  std::uint64_t seed = 1;
  /// Any of: dp, ktree-brute, ktree-color, ktree-algebraic.
  std::vector<std::string> methods = {"dp", "ktree-brute"};
  int repetitions = 1;
  double eps = 1.0;
  std::optional<int> g;
  std::uint64_t groupCap = 1'000'000;
  double delta = 1.0 / 1048576.0;
};

struct BenchRow {
  int instance = 0;
  std::string method;
  /// Optimum, "infeasible", or "skipped: cap" / "skipped: guard".
  std::string answer;
  double elapsedMs = 0.0;  // median over repetitions
  int trials = 0;
  nlohmann::json params;
  bool skipped() const { return answer.rfind("skipped", 0) == 0; }
};

struct BenchResult {
  std::vector<BenchRow> rows;  // instance-major, methods in config order
  int disagreements = 0;
  nlohmann::json summary;
};

/// Throws std::invalid_argument for empty ranges, zero repetitions or an
/// unknown method.
BenchResult bench_suite(const BenchConfig& cfg);

/// Header "instance,method,answer,elapsed_ms,trials,params".
std::string bench_csv(const BenchResult& result, bool includeTiming = true);

}  // namespace covertree
