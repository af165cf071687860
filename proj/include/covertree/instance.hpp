#pragma once

// Covering instances: data model, text format, generation and validation.
//
// Elements are 1-based in files and 0-based in memory.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace covertree {

struct SetCoverInstance {
  int n = 0;
  /// Each set holds sorted, distinct 0-based element indices.
  std::vector<std::vector<int>> sets;

  int m() const { return static_cast<int>(sets.size()); }
  /// Union of all sets equals the ground set.
  bool feasible() const;
  /// Number of elements in the union of all sets.
  int coverable() const;
  int max_set_size() const;

  friend bool operator==(const SetCoverInstance&, const SetCoverInstance&) = default;
};

struct PartialCoverInstance {
  SetCoverInstance base;
  int p = 1;

  friend bool operator==(const PartialCoverInstance&, const PartialCoverInstance&) = default;
};

/// Reads "n m" then m lines "k e1 ... ek". Throws ParseError naming the line.
SetCoverInstance parse_set_cover(std::istream& in);
SetCoverInstance parse_set_cover(std::string_view text);

/// Same format preceded by a line "p P".
PartialCoverInstance parse_partial_cover(std::istream& in);
PartialCoverInstance parse_partial_cover(std::string_view text);

std::string serialize_set_cover(const SetCoverInstance& sc);
std::string serialize_partial_cover(const PartialCoverInstance& pc);

/// m sets, each a uniform subset of uniform size in [1, maxSetSize].
/// With makeFeasible, a singleton is appended for every uncovered element.
/// Throws std::invalid_argument for impossible parameters.
SetCoverInstance random_instance(int n, int m, int maxSetSize, std::uint64_t seed,
                                 bool makeFeasible = false);

/// Human-readable findings in a fixed order: coverage, malformed sets, duplicates.
std::vector<std::string> validate(const SetCoverInstance& sc);

}  // namespace covertree
