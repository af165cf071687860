#pragma once

// Cover solvers built on the kTree reductions.
//
// Set Cover: every partition alpha of n gives a tree; the answer is the
// smallest |alpha| whose tree embeds in the one host G_g. Instances the
// reduction cannot handle (a solution with fewer than g sets, or a set
// larger than n/g^2 in every optimum) go to the two exact handlers.
//
// p-Partial Cover: the same over partitions of p with the rooted directed
// host, queried with the root anchored and classes enforced.

#include <cstdint>
#include <optional>

#include "covertree/instance.hpp"
#include "covertree/ktree.hpp"
#include "covertree/partitions.hpp"
#include "covertree/report.hpp"

namespace covertree {

struct PipelineParams {
  /// Accuracy parameter in (0, 1].
  double eps = 1.0;
  /// Replaces the g derived from eps.
  std::optional<int> g;
  Backend backend = Backend::Brute;
  /// Per kTree call.
  double delta = 1.0 / 1048576.0;
  std::uint64_t seed = 0;
  /// Skip partitions with at least as many parts as the best answer so far.
  bool prune = true;
  /// Partial cover only: query the directed host without anchor or classes.
  bool literal = false;
  std::uint64_t groupCap = 1'000'000;
  int bruteLimit = 256;
  int threads = 0;
};

/// ceil(9/eps).
int theorem1_g(double eps);
/// log2(2 + eps) - 1.
double theorem2_eps_prime(double eps);
/// ceil(4/eps'), eps' = log2(2 + eps) - 1.
int theorem2_g(double eps);
/// eps'/4, for eps' in (0, 1].
double theorem1_delta(double epsPrime);

/// Outcome of a scan over partition trees.
struct PartitionScan {
  /// Smallest |alpha| with a yes answer.
  std::optional<int> best;
  std::optional<Partition> alpha;
  /// Sets read off the best embedding, when the backend gives one.
  std::optional<std::vector<int>> sets;
  long long calls = 0;
  long long partitions = 0;
};

/// Scan over p(n) against the undirected host for width g. Throws
/// ReductionRefused when the host cannot be built.
PartitionScan scan_undirected(const SetCoverInstance& sc, int g, const PipelineParams& params);

/// Scan over p(p) against the directed host for width g.
PartitionScan scan_directed(const PartialCoverInstance& pc, int g, const PipelineParams& params);

/// Minimum set cover. Infeasible instances report Infeasible.
SolveReport set_cover_via_ktree(const SetCoverInstance& sc, const PipelineParams& params);

/// Fewest sets covering at least p elements; Infeasible when fewer than p
/// elements are coverable. Throws std::invalid_argument for p outside [1, n].
SolveReport partial_cover_via_ktree(const PartialCoverInstance& pc, const PipelineParams& params);

}  // namespace covertree
