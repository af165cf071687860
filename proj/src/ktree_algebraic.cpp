// Multilinear detection over GF(2^64)[Z_2^k].
//
// Each tree vertex t placed on host vertex u contributes the variable
// x_{t,u} = a_{t,u} (e_0 + e_{b_u}). Summing the products over all
// homomorphisms kills every non-injective one ((e_0 + e_b)^2 = 0) and every
// injective one whose b-vectors are dependent; the survivors each contribute
// their weight times the all-ones element J. So the whole sum is c * J.
//
// The reference evaluates that sum literally with dense group-algebra values.
// The kernel computes c directly: under F[Z_2^k] = F[y]/(y_i^2) the element J
// is y_1...y_k, and extracting that coefficient through the ranked zeta
// transform turns every product into a scalar one, giving
//   c = sum_{X in Z_2^k} sum_h prod_t a_{t,h(t)} [<b_{h(t)}, X> = 1].

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include <omp.h>

#include "covertree/errors.hpp"
#include "covertree/ktree.hpp"
#include "covertree/rng.hpp"

namespace covertree {

int algebraic_trials(double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must lie in (0, 1)");
  const double t = std::ceil(std::log(1.0 / delta) / std::log(1.0 / (1.0 - kAlgebraicTrialSuccess)));
  return std::max(1, static_cast<int>(t));
}

namespace {

constexpr int kReferenceMaxK = 12;

/// Random draws of one trial, in a fixed order so both routes agree.
struct TrialDraw {
  std::vector<std::uint32_t> b;  // per host vertex, k bits
  std::vector<gf64> a;           // per (tree vertex, host vertex), nonzero

  TrialDraw(int k, int hostVertices, std::uint64_t seed) {
    Rng rng(seed);
    b.resize(static_cast<std::size_t>(hostVertices));
    for (auto& x : b) x = static_cast<std::uint32_t>(rng.below(std::uint64_t{1} << k));
    a.resize(static_cast<std::size_t>(k) * hostVertices);
    for (auto& x : a) x = 1 + rng.below(~std::uint64_t{0});
  }
};

/// Tree traversal data shared by both evaluation routes.
struct Plan {
  int k = 0;
  int hostVertices = 0;
  std::vector<int> postorder;
  /// admissible[t] = host vertices allowed for tree vertex t.
  std::vector<std::vector<int>> admissible;

  Plan(const HostGraph& host, const PatternTree& tree, const EmbedOptions& opts)
      : k(tree.vertex_count()), hostVertices(host.vertex_count()) {
    postorder.assign(tree.preorder().rbegin(), tree.preorder().rend());
    admissible.resize(static_cast<std::size_t>(k));
    for (int t = 0; t < k; ++t) {
      for (int u = 0; u < hostVertices; ++u) {
        if (t == tree.root() && opts.anchor && *opts.anchor != u) continue;
        if (!detail::class_admissible(host, tree, opts, t, u)) continue;
        admissible[t].push_back(u);
      }
    }
  }
};

std::uint64_t trial_seed(const EmbedOptions& opts, int trial) {
  return stream_seed(opts.seed, static_cast<std::uint64_t>(trial));
}

/// c for one trial: the sieve over X, OpenMP-parallel over X.
gf64 sieve_trial(const HostGraph& host, const PatternTree& tree, const Plan& plan, const TrialDraw& draw,
                 int threads) {
  const int k = plan.k;
  const int nv = plan.hostVertices;
  const std::int64_t span = std::int64_t{1} << k;
  gf64 total = 0;

#pragma omp parallel num_threads(threads) reduction(^ : total)
  {
    std::vector<gf64> value(static_cast<std::size_t>(k) * nv, 0);
    std::vector<char> odd(static_cast<std::size_t>(nv));
#pragma omp for schedule(static)
    for (std::int64_t x = 0; x < span; ++x) {
      const auto mask = static_cast<std::uint32_t>(x);
      for (int u = 0; u < nv; ++u) odd[u] = static_cast<char>(std::popcount(draw.b[u] & mask) & 1);
      for (int t : plan.postorder) {
        gf64* row = value.data() + static_cast<std::size_t>(t) * nv;
        std::fill(row, row + nv, 0);
        const gf64* weights = draw.a.data() + static_cast<std::size_t>(t) * nv;
        for (int u : plan.admissible[t]) {
          if (!odd[u]) continue;
          gf64 prod = weights[u];
          for (int c : tree.children(t)) {
            const gf64* child = value.data() + static_cast<std::size_t>(c) * nv;
            gf64 sum = 0;
            for (int w : tree.arc_down(c) ? host.out(u) : host.in(u)) sum ^= child[w];
            prod = gf_mul(prod, sum);
            if (prod == 0) break;
          }
          row[u] = prod;
        }
      }
      const gf64* root = value.data() + static_cast<std::size_t>(tree.root()) * nv;
      for (int u = 0; u < nv; ++u) total ^= root[u];
    }
  }
  return total;
}

GroupAlgebraElement reference_trial(const HostGraph& host, const PatternTree& tree, const Plan& plan,
                                    const TrialDraw& draw) {
  const int k = plan.k;
  const int nv = plan.hostVertices;
  std::vector<std::vector<GroupAlgebraElement>> value(static_cast<std::size_t>(k));
  for (int t : plan.postorder) {
    value[t].assign(static_cast<std::size_t>(nv), GroupAlgebraElement(k));
    for (int u : plan.admissible[t]) {
      GroupAlgebraElement x = GroupAlgebraElement::identity(k) + GroupAlgebraElement::basis(k, draw.b[u]);
      x.scale(draw.a[static_cast<std::size_t>(t) * nv + u]);
      for (int c : tree.children(t)) {
        GroupAlgebraElement sum(k);
        for (int w : tree.arc_down(c) ? host.out(u) : host.in(u)) sum += value[c][w];
        x = ga_mul(x, sum);
      }
      value[t][u] = std::move(x);
    }
    for (int c : tree.children(t)) value[c].clear();
  }
  GroupAlgebraElement total(k);
  for (int u = 0; u < nv; ++u) total += value[tree.root()][u];
  return total;
}

void check_algebraic(const HostGraph& host, const PatternTree& tree, const EmbedOptions& opts, int maxK) {
  detail::check_inputs(host, tree, opts);
  if (tree.vertex_count() > maxK) {
    throw GuardExceeded("algebraic engine supports k <= " + std::to_string(maxK) + ", got " +
                        std::to_string(tree.vertex_count()));
  }
}

template <class TrialFn>
SolveReport run_trials(const HostGraph& host, const PatternTree& tree, const EmbedOptions& opts, const char* name,
                       TrialFn&& trialIsNonzero) {
  Stopwatch clock;
  const int planned = algebraic_trials(opts.delta);
  SolveReport report;
  report.backend = name;
  report.seed = opts.seed;
  bool found = false;
  int used = 0;
  if (tree.vertex_count() <= host.vertex_count()) {
    for (int trial = 0; trial < planned && !found; ++trial) {
      ++used;
      found = trialIsNonzero(trial);
    }
  }
  report.answer = found;
  report.trials = used;
  report.params = {{"k", tree.vertex_count()}, {"delta", opts.delta}, {"planned_trials", planned}};
  report.elapsed = clock.elapsed();
  return report;
}

}  // namespace

gf64 algebraic_trial_scalar(const HostGraph& host, const PatternTree& tree, const EmbedOptions& opts, int trial) {
  check_algebraic(host, tree, opts, kAlgebraicMaxK);
  const Plan plan(host, tree, opts);
  const TrialDraw draw(plan.k, plan.hostVertices, trial_seed(opts, trial));
  return sieve_trial(host, tree, plan, draw, opts.threads > 0 ? opts.threads : omp_get_max_threads());
}

GroupAlgebraElement algebraic_trial_element(const HostGraph& host, const PatternTree& tree, const EmbedOptions& opts,
                                            int trial) {
  check_algebraic(host, tree, opts, kReferenceMaxK);
  const Plan plan(host, tree, opts);
  const TrialDraw draw(plan.k, plan.hostVertices, trial_seed(opts, trial));
  return reference_trial(host, tree, plan, draw);
}

SolveReport solve_algebraic(const HostGraph& host, const PatternTree& tree, const EmbedOptions& opts) {
  check_algebraic(host, tree, opts, kAlgebraicMaxK);
  const Plan plan(host, tree, opts);
  const int threads = opts.threads > 0 ? opts.threads : omp_get_max_threads();
  return run_trials(host, tree, opts, "algebraic", [&](int trial) {
    const TrialDraw draw(plan.k, plan.hostVertices, trial_seed(opts, trial));
    return sieve_trial(host, tree, plan, draw, threads) != 0;
  });
}

SolveReport solve_algebraic_reference(const HostGraph& host, const PatternTree& tree, const EmbedOptions& opts) {
  check_algebraic(host, tree, opts, kReferenceMaxK);
  const Plan plan(host, tree, opts);
  return run_trials(host, tree, opts, "algebraic-reference", [&](int trial) {
    const TrialDraw draw(plan.k, plan.hostVertices, trial_seed(opts, trial));
    return !reference_trial(host, tree, plan, draw).is_zero();
  });
}

}  // namespace covertree
