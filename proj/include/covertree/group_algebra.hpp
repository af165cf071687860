#pragma once

// The group algebra GF(2^64)[Z_2^k]: formal sums over k-bit group members,
// multiplied by XOR-convolution.

#include <cstdint>
#include <vector>

#include "covertree/gf2_64.hpp"

namespace covertree {

class GroupAlgebraElement {
 public:
  /// Zero element of dimension k (0 <= k <= 24).
  explicit GroupAlgebraElement(int k);

  /// Indicator e_b of the group member b.
  static GroupAlgebraElement basis(int k, std::uint32_t b);
  /// e_0, the multiplicative identity.
  static GroupAlgebraElement identity(int k) { return basis(k, 0); }
  /// Sum of all e_z.
  static GroupAlgebraElement all_ones(int k);

  int dimension() const { return k_; }
  std::size_t size() const { return coeff_.size(); }
  gf64& operator[](std::uint32_t z) { return coeff_[z]; }
  gf64 operator[](std::uint32_t z) const { return coeff_[z]; }
  const std::vector<gf64>& coefficients() const { return coeff_; }

  bool is_zero() const;
  /// Coefficient-wise field addition.
  GroupAlgebraElement& operator+=(const GroupAlgebraElement& other);
  /// Multiplies every coefficient by a field scalar.
  GroupAlgebraElement& scale(gf64 s);

  friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
  friend bool operator==(const GroupAlgebraElement&, const GroupAlgebraElement&) = default;

 private:
  int k_;
  std::vector<gf64> coeff_;
};

/// O(4^k) double loop: result[x ^ y] += A[x] * B[y].
GroupAlgebraElement ga_mul_naive(const GroupAlgebraElement& a, const GroupAlgebraElement& b);

/// Bit-sliced Walsh-Hadamard convolution. Each of the 64 coefficient slices
/// is lifted to exact integers, transformed, multiplied slice-pairwise by
/// polynomial degree, transformed back and reduced mod 2; the 127 resulting
/// degree slices are recombined and reduced in the field. k <= 16.
GroupAlgebraElement ga_mul_fast(const GroupAlgebraElement& a, const GroupAlgebraElement& b);

/// Below this the naive loop is faster (measured by bench_kernels).
inline constexpr int kNaiveMulMaxK = 10;

/// Dispatches on kNaiveMulMaxK. Throws std::invalid_argument on dimension mismatch.
GroupAlgebraElement ga_mul(const GroupAlgebraElement& a, const GroupAlgebraElement& b);

/// a * (e_0 + e_b) in O(2^k), the only product shape the tree DP needs per vertex.
GroupAlgebraElement ga_mul_binomial(const GroupAlgebraElement& a, std::uint32_t b);

}  // namespace covertree
