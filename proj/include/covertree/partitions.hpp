#pragma once

// Unordered integer partitions: enumeration, exact counting, the
// Hardy-Ramanujan estimate, and the g-grouped ("shrunk") representation used
// by the reduction trees.

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace covertree {

using BigInt = boost::multiprecision::cpp_int;

struct Partition {
  std::vector<int> parts;  // non-increasing, all >= 1
  int target = 0;

  int size() const { return static_cast<int>(parts.size()); }
  friend bool operator==(const Partition&, const Partition&) = default;
};

struct ShrunkPartition {
  std::vector<int> grouped;  // floor(l/g) sums of g consecutive parts
  std::vector<int> tail;     // the remaining l mod g parts
  int g = 1;
};

/// Streams the partitions of `a` in reverse-lexicographic order, (a) first and
/// (1,...,1) last, with constant amortized work per step.
class PartitionStream {
 public:
  /// Throws std::invalid_argument for a < 1.
  explicit PartitionStream(int a);

  /// Writes the next partition into `out`; false once exhausted.
  bool next(Partition& out);

 private:
  int target_;
  // Multiplicity form: distinct part values (descending) and their counts.
  std::vector<int> value_;
  std::vector<int> count_;
  bool started_ = false;
  bool done_ = false;
};

/// Convenience: all partitions of a, in stream order.
std::vector<Partition> enumerate_partitions(int a);

/// Exact p(a) by Euler's pentagonal-number recurrence. p(0) = 1.
BigInt count_partitions(int a);

/// e^{pi sqrt(2a/3)} / (4 a sqrt 3). Throws std::overflow_error when the value
/// is not representable, std::invalid_argument for a < 1.
double hardy_estimate(int a);

/// Groups consecutive parts g at a time in stored order; leftovers form the tail.
ShrunkPartition shrink(const Partition& alpha, int g);

/// Builds a Partition from arbitrary positive parts (sorted non-increasing).
Partition make_partition(std::vector<int> parts);

}  // namespace covertree
