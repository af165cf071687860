#pragma once

// Tree-pattern subgraph embedding: does `tree` occur as a (not necessarily
// induced) subgraph of `host`? Three backends share one option set:
//
//   brute      exact backtracking, returns a witness
//   color      color-coding, one-sided (yes is certain)
//   algebraic  group-algebra multilinear detection, one-sided, O*(2^k)
//
// Directed inputs map every tree arc onto a host arc with the same
// orientation. With classConstrained, tree vertex t may only map to host
// vertices of class(t); with an anchor, the tree root must map to it.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "covertree/graph.hpp"
#include "covertree/group_algebra.hpp"
#include "covertree/report.hpp"

namespace covertree {

enum class Backend { Brute, ColorCoding, Algebraic };

std::string_view to_string(Backend b);
std::optional<Backend> backend_from_string(std::string_view name);

struct EmbedOptions {
  std::optional<int> anchor;
  bool classConstrained = false;
  /// Failure probability bound for the randomized backends, in (0, 1).
  double delta = 1.0 / 1024.0;
  std::uint64_t seed = 0;
  /// Largest tree the brute-force oracle accepts.
  int bruteLimit = 14;
  /// OpenMP threads for the parallel kernels; 0 keeps the runtime default.
  int threads = 0;
};

inline constexpr int kColorCodingMaxK = 25;
inline constexpr int kAlgebraicMaxK = 20;
/// Per-trial success lower bound used to size trial counts (q >= 0.288).
inline constexpr double kAlgebraicTrialSuccess = 0.28;

/// ceil(ln(1/delta) / ln(1/(1 - 0.28))).
int algebraic_trials(double delta);
/// ceil(e^k ln(1/delta)).
long long color_coding_trials(int k, double delta);

SolveReport solve_brute(const HostGraph& host, const PatternTree& tree, const EmbedOptions& opts);
SolveReport solve_color_coding(const HostGraph& host, const PatternTree& tree, const EmbedOptions& opts);

/// Parallel kernel. Per trial it evaluates the group-algebra polynomial's
/// single coefficient c (the result is always c * sum_z e_z) as
///   c = sum over X in Z_2^k of hom_X,
/// where hom_X is the weighted homomorphism count with vertex weights
/// a_{t,u} * [popcount(b_u & X) odd]. OpenMP splits the X range.
SolveReport solve_algebraic(const HostGraph& host, const PatternTree& tree, const EmbedOptions& opts);

/// Serial reference: the literal bottom-up DP with group-algebra values
/// D[t][u] = x_{t,u} * prod_c sum_{u'} D[c][u'], x_{t,u} = a_{t,u}(e_0 + e_{b_u}).
/// Same randomness as solve_algebraic. Guarded to k <= 12.
SolveReport solve_algebraic_reference(const HostGraph& host, const PatternTree& tree, const EmbedOptions& opts);

SolveReport solve(Backend backend, const HostGraph& host, const PatternTree& tree, const EmbedOptions& opts);

/// Final group-algebra values of one algebraic trial, for cross-checking the
/// two evaluation routes: the sieve's scalar c and the reference element.
gf64 algebraic_trial_scalar(const HostGraph& host, const PatternTree& tree, const EmbedOptions& opts, int trial);
GroupAlgebraElement algebraic_trial_element(const HostGraph& host, const PatternTree& tree, const EmbedOptions& opts,
                                            int trial);

/// Checks injectivity, arc preservation with orientation, anchor and classes.
bool verify_embedding(const HostGraph& host, const PatternTree& tree, const std::vector<int>& mapping,
                      const EmbedOptions& opts);

namespace detail {

/// Host vertex u may receive tree vertex t under the class constraint.
inline bool class_admissible(const HostGraph& host, const PatternTree& tree, const EmbedOptions& opts, int t, int u) {
  return !opts.classConstrained || host.vertex_class(u) == tree.vertex_class(t);
}

/// Shared argument checks. Throws std::invalid_argument.
void check_inputs(const HostGraph& host, const PatternTree& tree, const EmbedOptions& opts);

}  // namespace detail

}  // namespace covertree
