#include "covertree/bench.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "covertree/cover.hpp"
#include "covertree/errors.hpp"
#include "covertree/instance.hpp"
#include "covertree/pipeline.hpp"
#include "covertree/rng.hpp"

namespace covertree {

namespace {

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t h = v.size() / 2;
  return v.size() % 2 ? v[h] : (v[h - 1] + v[h]) / 2.0;
}

std::string answer_text(const SolveReport& r) {
  if (auto v = r.optimum()) return std::to_string(*v);
  return "infeasible";
}

void check_config(const BenchConfig& cfg) {
  if (cfg.count < 1 || cfg.nMin < 1 || cfg.nMin > cfg.nMax || cfg.mMin < 1 || cfg.mMin > cfg.mMax ||
      cfg.maxSetSize < 1) {
    throw std::invalid_argument("bench: empty instance range");
  }
  if (cfg.repetitions < 1) throw std::invalid_argument("bench: repetitions must be >= 1");
  if (cfg.methods.empty()) throw std::invalid_argument("bench: no methods");
  if (cfg.pRule != "none" && cfg.pRule != "uniform" && cfg.pRule != "n") {
    throw std::invalid_argument("bench: unknown p rule '" + cfg.pRule + "'");
  }
  for (const auto& m : cfg.methods) {
    if (m != "dp" && !(m.rfind("ktree-", 0) == 0 && backend_from_string(m.substr(6)))) {
      throw std::invalid_argument("bench: unknown method '" + m + "'");
    }
  }
}

}  // namespace

BenchResult bench_suite(const BenchConfig& cfg) {
  check_config(cfg);
  BenchResult result;
  std::map<std::string, std::vector<double>> times;
  std::map<std::string, int> skips;

  for (int idx = 0; idx < cfg.count; ++idx) {
    Rng rng(stream_seed(cfg.seed, static_cast<std::uint64_t>(idx)));
    const int n = static_cast<int>(rng.uniform_int(cfg.nMin, cfg.nMax));
    const int m = static_cast<int>(rng.uniform_int(cfg.mMin, cfg.mMax));
    const int p = cfg.pRule == "uniform" ? static_cast<int>(rng.uniform_int(1, n)) : n;
    const std::uint64_t instSeed = rng.next();
    const bool partial = cfg.pRule != "none";
    PartialCoverInstance pc{random_instance(n, m, std::min(cfg.maxSetSize, n), instSeed, !partial), p};

    std::set<std::string> answers;
    for (const auto& method : cfg.methods) {
      BenchRow row;
      row.instance = idx;
      row.method = method;
      std::vector<double> elapsed;
      try {
        for (int rep = 0; rep < cfg.repetitions; ++rep) {
          SolveReport r;
          if (method == "dp") {
            r = partial ? dp_partial_cover(pc) : dp_set_cover(pc.base);
          } else {
            PipelineParams pp;
            pp.eps = cfg.eps;
            pp.g = cfg.g;
            pp.backend = *backend_from_string(method.substr(6));
            pp.delta = cfg.delta;
            pp.seed = stream_seed(cfg.seed ^ 0x9e3779b97f4a7c15ULL, static_cast<std::uint64_t>(idx));
            pp.groupCap = cfg.groupCap;
            r = partial ? partial_cover_via_ktree(pc, pp) : set_cover_via_ktree(pc.base, pp);
          }
          elapsed.push_back(r.elapsed_ms());
          row.answer = answer_text(r);
          row.trials = r.trials;
          row.params = r.params;
        }
        row.elapsedMs = median(elapsed);
        times[method].push_back(row.elapsedMs);
        answers.insert(row.answer);
      } catch (const ReductionRefused& e) {
        row.answer = "skipped: cap";
        row.params = {{"reason", e.what()}};
        ++skips[method];
      } catch (const GuardExceeded& e) {
        row.answer = "skipped: guard";
        row.params = {{"reason", e.what()}};
        ++skips[method];
      }
      row.params["n"] = n;
      row.params["m"] = m;
      if (partial) row.params["p"] = p;
      result.rows.push_back(std::move(row));
    }
    if (answers.size() > 1) ++result.disagreements;
  }

  nlohmann::json methods = nlohmann::json::object();
  for (const auto& method : cfg.methods) {
    methods[method] = {{"median_ms", median(times[method])},
                       {"solved", times[method].size()},
                       {"skipped", skips[method]}};
  }
  result.summary = {{"suite", cfg.suite},
                    {"instances", cfg.count},
                    {"rows", result.rows.size()},
                    {"seed", cfg.seed},
                    {"p_rule", cfg.pRule},
                    {"repetitions", cfg.repetitions},
                    {"disagreements", result.disagreements},
                    {"methods", methods}};
  return result;
}

std::string bench_csv(const BenchResult& result, bool includeTiming) {
  std::ostringstream out;
  out << "instance,method,answer,elapsed_ms,trials,params\n";
  for (const auto& row : result.rows) {
    std::string params = row.params.dump();
    std::string quoted;
    for (char c : params) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    out << row.instance << ',' << row.method << ',' << row.answer << ',';
    if (includeTiming) out << row.elapsedMs;
    out << ',' << row.trials << ",\"" << quoted << "\"\n";
  }
  return out.str();
}

}  // namespace covertree
