#pragma once

// Exact covering baselines and the two handlers for instances outside the
// reduction's assumptions.

#include <optional>

#include "covertree/instance.hpp"
#include "covertree/report.hpp"

namespace covertree {

/// Largest ground set the subset tables accept.
inline constexpr int kDpMaxN = 25;

/// Minimum set cover by a table over all 2^n element subsets.
/// Infeasible instances report Infeasible. Throws GuardExceeded for n > 25.
SolveReport dp_set_cover(const SetCoverInstance& sc);

/// Fewest sets whose union has at least p elements. Throws
/// std::invalid_argument for p outside [1, n], GuardExceeded for n > 25.
SolveReport dp_partial_cover(const PartialCoverInstance& pc);

/// Fix each set of size >= n/g^2 and solve the rest exactly; best of those,
/// or nothing when no set is that large. Requires a feasible instance.
std::optional<SolveReport> large_set_handler(const SetCoverInstance& sc, int g);

/// Smallest cover with at most g-1 sets, or nothing.
std::optional<SolveReport> small_solution_handler(const SetCoverInstance& sc, int g);

}  // namespace covertree
