#include "covertree/report.hpp"

namespace covertree {

bool SolveReport::yes() const {
  if (const bool* b = std::get_if<bool>(&answer)) return *b;
  return std::holds_alternative<long long>(answer);
}

std::optional<long long> SolveReport::optimum() const {
  if (const long long* v = std::get_if<long long>(&answer)) return *v;
  return std::nullopt;
}

nlohmann::json to_json(const SolveReport& report, bool includeTiming) {
  nlohmann::json j;
  if (const bool* b = std::get_if<bool>(&report.answer)) {
    j["answer"] = *b ? "yes" : "no";
  } else if (const long long* v = std::get_if<long long>(&report.answer)) {
    j["optimum"] = *v;
  } else {
    j["optimum"] = "infeasible";
  }
  if (report.witness) {
    std::vector<int> oneBased(*report.witness);
    for (int& x : oneBased) ++x;
    j["witness"] = oneBased;
  }
  j["method"] = report.backend;
  j["trials"] = report.trials;
  j["seed"] = report.seed;
  j["params"] = report.params;
  if (includeTiming) j["elapsed_ms"] = report.elapsed_ms();
  return j;
}

}  // namespace covertree
