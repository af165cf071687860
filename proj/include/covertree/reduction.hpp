#pragma once

// Set Cover -> kTree reduction: the undirected host G_g with its guard
// gadgets, the partition trees T_g^alpha, the rooted directed variant used
// for p-Partial Cover, and the undirected -> directed transform.

#include <cstdint>
#include <utility>
#include <vector>

#include "covertree/graph.hpp"
#include "covertree/instance.hpp"
#include "covertree/partitions.hpp"

namespace covertree {

struct ReductionParams {
  int g = 1;
  /// Largest group layer (number of g-subsets) the builders will materialize.
  std::uint64_t groupCap = 1'000'000;

  /// Guard column length ceil(2n/g).
  int rho(int n) const { return (2 * n + g - 1) / g; }
};

/// C(m, g), saturating at UINT64_MAX.
std::uint64_t binomial(int m, int g);

/// Vertices: elements, sets, all g-subsets of sets, four guard columns of
/// length rho, then r, r_g, r_1, r_2. Throws ReductionRefused when g > m or
/// C(m,g) exceeds the cap.
HostGraph build_host_undirected(const SetCoverInstance& sc, const ReductionParams& params);

/// Tree for a partition of n. Throws std::invalid_argument if alpha does not sum to n.
PatternTree build_tree_undirected(const Partition& alpha, const ReductionParams& params, int n);

/// Rooted host: r -> sets, r -> r_g, r_g -> groups, sets/groups -> their elements.
/// When g > m the group layer is empty and r_g is a sink.
HostGraph build_host_directed(const SetCoverInstance& sc, const ReductionParams& params);

/// Arborescence for a partition of p: root, r'_g, one star per part.
PatternTree build_tree_directed(const Partition& alpha, const ReductionParams& params);

/// Doubles every host edge and orients the tree away from its root.
/// Throws std::invalid_argument if either input is already directed.
std::pair<HostGraph, PatternTree> undirected_to_directed(const HostGraph& host, const PatternTree& tree);

/// Every set has size <= n/g^2 (exact rational comparison).
bool check_assumption1(const SetCoverInstance& sc, const ReductionParams& params);

/// Set indices read off an embedding: one per Set-class center, g per
/// Group-class center. Sorted; may contain repeats across groups.
std::vector<int> sets_from_embedding(const HostGraph& host, const PatternTree& tree, const std::vector<int>& mapping);

/// Instance on which the unanchored, class-blind reading of the directed
/// construction undercounts: g+1 singleton sets over g+1 elements, p = g+1.
/// The true optimum is g+1.
PartialCoverInstance literal_mode_counterexample(int g);

}  // namespace covertree
