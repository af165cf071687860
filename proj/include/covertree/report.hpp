#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace covertree {

struct Infeasible {
  friend bool operator==(Infeasible, Infeasible) { return true; }
};

/// Outcome of a decision (kTree) or optimization (cover) solve.
struct SolveReport {
  /// bool for decisions, an optimum cardinality, or Infeasible.
  std::variant<bool, long long, Infeasible> answer = false;
  /// Tree->host vertex map for embeddings, set indices for covers (0-based).
  std::optional<std::vector<int>> witness;
  std::string backend;
  int trials = 0;
  std::uint64_t seed = 0;
  std::chrono::nanoseconds elapsed{0};
  nlohmann::json params = nlohmann::json::object();

  bool yes() const;
  std::optional<long long> optimum() const;
  bool infeasible() const { return std::holds_alternative<Infeasible>(answer); }
  double elapsed_ms() const { return std::chrono::duration<double, std::milli>(elapsed).count(); }
};

/// {optimum|answer, witness?, method, trials, seed, params, elapsed_ms}.
/// Witness indices are written 1-based. Timing is omitted when includeTiming
/// is false so that outputs are byte-reproducible.
nlohmann::json to_json(const SolveReport& report, bool includeTiming = true);

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  std::chrono::nanoseconds elapsed() const {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start_);
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace covertree
