#include "covertree/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "covertree/cover.hpp"
#include "covertree/reduction.hpp"
#include "covertree/rng.hpp"

namespace covertree {

namespace {

void check_eps(double eps) {
  if (!(eps > 0.0 && eps <= 1.0)) throw std::invalid_argument("eps must lie in (0, 1]");
}

int resolve_g(const PipelineParams& params, int derived) {
  const int g = params.g.value_or(derived);
  if (g < 1) throw std::invalid_argument("g must be >= 1");
  return g;
}

EmbedOptions call_options(const PipelineParams& params, long long index) {
  EmbedOptions o;
  o.delta = params.delta;
  o.seed = stream_seed(params.seed, static_cast<std::uint64_t>(index));
  o.bruteLimit = params.bruteLimit;
  o.threads = params.threads;
  return o;
}

template <class TreeFn>
PartitionScan scan(int total, const HostGraph& host, const PipelineParams& params, const EmbedOptions& base,
                   TreeFn&& buildTree) {
  PartitionScan out;
  PartitionStream stream(total);
  Partition alpha;
  while (stream.next(alpha)) {
    const long long index = out.partitions++;
    if (params.prune && out.best && alpha.size() >= *out.best) continue;
    const PatternTree tree = buildTree(alpha);
    EmbedOptions opts = call_options(params, index);
    opts.anchor = base.anchor;
    opts.classConstrained = base.classConstrained;
    ++out.calls;
    const SolveReport r = solve(params.backend, host, tree, opts);
    if (!r.yes() || (out.best && alpha.size() >= *out.best)) continue;
    out.best = alpha.size();
    out.alpha = alpha;
    out.sets.reset();
    if (r.witness) {
      auto sets = sets_from_embedding(host, tree, *r.witness);
      sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
      out.sets = std::move(sets);
    }
  }
  return out;
}

int covered_count(const SetCoverInstance& sc, const std::vector<int>& sets) {
  std::vector<char> hit(static_cast<std::size_t>(sc.n), 0);
  int count = 0;
  for (int i : sets) {
    if (i < 0 || i >= sc.m()) return -1;
    for (int e : sc.sets[i])
      if (!hit[e]) {
        hit[e] = 1;
        ++count;
      }
  }
  return count;
}

nlohmann::json scan_params(const PartitionScan& s) {
  return {{"ktree_calls", s.calls}, {"partitions", s.partitions}};
}

}  // namespace

int theorem1_g(double eps) {
  check_eps(eps);
  return static_cast<int>(std::ceil(9.0 / eps - 1e-12));
}

double theorem2_eps_prime(double eps) {
  check_eps(eps);
  return std::log2(2.0 + eps) - 1.0;
}

int theorem2_g(double eps) { return static_cast<int>(std::ceil(4.0 / theorem2_eps_prime(eps) - 1e-12)); }

double theorem1_delta(double epsPrime) {
  if (!(epsPrime > 0.0 && epsPrime <= 1.0)) throw std::invalid_argument("eps' must lie in (0, 1]");
  return epsPrime / 4.0;
}

PartitionScan scan_undirected(const SetCoverInstance& sc, int g, const PipelineParams& params) {
  ReductionParams rp;
  rp.g = g;
  rp.groupCap = params.groupCap;
  const HostGraph host = build_host_undirected(sc, rp);
  return scan(sc.n, host, params, EmbedOptions{},
              [&](const Partition& alpha) { return build_tree_undirected(alpha, rp, sc.n); });
}

PartitionScan scan_directed(const PartialCoverInstance& pc, int g, const PipelineParams& params) {
  ReductionParams rp;
  rp.g = g;
  rp.groupCap = params.groupCap;
  const HostGraph host = build_host_directed(pc.base, rp);
  EmbedOptions base;
  if (!params.literal) {
    base.anchor = host.find_class(VertexClass::RootR);
    base.classConstrained = true;
  }
  return scan(pc.p, host, params, base, [&](const Partition& alpha) { return build_tree_directed(alpha, rp); });
}

SolveReport set_cover_via_ktree(const SetCoverInstance& sc, const PipelineParams& params) {
  Stopwatch clock;
  const int g = resolve_g(params, theorem1_g(params.eps));
  SolveReport report;
  report.backend = "ktree-" + std::string(to_string(params.backend));
  report.seed = params.seed;
  report.answer = Infeasible{};
  report.params = {{"eps", params.eps}, {"g", g}, {"delta", params.delta}, {"ktree_calls", 0}};

  if (sc.feasible()) {
    std::optional<long long> best;
    std::string source;
    auto offer = [&](long long value, std::optional<std::vector<int>> witness, const char* from) {
      if (best && *best <= value) return;
      best = value;
      report.witness = std::move(witness);
      source = from;
    };
    const auto small = small_solution_handler(sc, g);
    if (small) offer(*small->optimum(), small->witness, "small-solution");
    if (const auto large = large_set_handler(sc, g)) offer(*large->optimum(), large->witness, "large-set");

    // Without a cover of fewer than g sets, every optimum that avoids the
    // large sets is found by the reduction on the remaining ones.
    if (!small) {
      SetCoverInstance restricted;
      restricted.n = sc.n;
      std::vector<int> original;
      for (int i = 0; i < sc.m(); ++i) {
        if (static_cast<long long>(sc.sets[i].size()) * g * g > sc.n) continue;
        restricted.sets.push_back(sc.sets[i]);
        original.push_back(i);
      }
      if (restricted.m() > 0 && restricted.feasible()) {
        const PartitionScan s = scan_undirected(restricted, g, params);
        report.params.update(scan_params(s));
        report.params["restricted_sets"] = restricted.m();
        report.trials = static_cast<int>(s.calls);
        if (s.best) {
          std::optional<std::vector<int>> witness;
          if (s.sets && covered_count(restricted, *s.sets) == sc.n) {
            witness.emplace();
            for (int i : *s.sets) witness->push_back(original[i]);
          }
          offer(*s.best, std::move(witness), "reduction");
        }
      }
    }
    if (best) {
      report.answer = *best;
      report.params["source"] = source;
    }
  }
  report.elapsed = clock.elapsed();
  return report;
}

SolveReport partial_cover_via_ktree(const PartialCoverInstance& pc, const PipelineParams& params) {
  if (pc.p < 1 || pc.p > pc.base.n) {
    throw std::invalid_argument("p must lie in [1, n], got p=" + std::to_string(pc.p));
  }
  Stopwatch clock;
  const int g = resolve_g(params, theorem2_g(params.eps));
  SolveReport report;
  report.backend = "ktree-" + std::string(to_string(params.backend));
  report.seed = params.seed;
  report.answer = Infeasible{};

  const PartitionScan s = scan_directed(pc, g, params);
  report.params = {{"eps", params.eps}, {"eps_prime", theorem2_eps_prime(params.eps)}, {"g", g},
                   {"delta", params.delta}, {"mode", params.literal ? "literal" : "anchored"}};
  report.params.update(scan_params(s));
  report.trials = static_cast<int>(s.calls);
  if (s.best) {
    report.answer = static_cast<long long>(*s.best);
    if (!params.literal && s.sets && covered_count(pc.base, *s.sets) >= pc.p) report.witness = s.sets;
  }
  report.elapsed = clock.elapsed();
  return report;
}

}  // namespace covertree
