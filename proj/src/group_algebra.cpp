#include "covertree/group_algebra.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

namespace covertree {

namespace {

constexpr int kMaxDimension = 24;
constexpr int kMaxFastDimension = 16;
constexpr int kSlices = 64;
constexpr int kProductSlices = 2 * kSlices - 1;

void require_same(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  if (a.dimension() != b.dimension()) {
    throw std::invalid_argument("group algebra dimension mismatch: " + std::to_string(a.dimension()) + " vs " +
                                std::to_string(b.dimension()));
  }
}

/// Unnormalized Walsh-Hadamard transform; applying it twice multiplies by 2^k.
void wht(std::int64_t* v, std::size_t n) {
  for (std::size_t len = 1; len < n; len <<= 1) {
    for (std::size_t i = 0; i < n; i += len << 1) {
      for (std::size_t j = i; j < i + len; ++j) {
        const std::int64_t x = v[j];
        const std::int64_t y = v[j + len];
        v[j] = x + y;
        v[j + len] = x - y;
      }
    }
  }
}

}  // namespace

GroupAlgebraElement::GroupAlgebraElement(int k) : k_(k) {
  if (k < 0 || k > kMaxDimension) throw std::invalid_argument("group algebra dimension out of range");
  coeff_.assign(std::size_t{1} << k, 0);
}

GroupAlgebraElement GroupAlgebraElement::basis(int k, std::uint32_t b) {
  GroupAlgebraElement e(k);
  if (b >= e.size()) throw std::invalid_argument("group member out of range");
  e.coeff_[b] = 1;
  return e;
}

GroupAlgebraElement GroupAlgebraElement::all_ones(int k) {
  GroupAlgebraElement e(k);
  std::fill(e.coeff_.begin(), e.coeff_.end(), gf64{1});
  return e;
}

bool GroupAlgebraElement::is_zero() const {
  return std::all_of(coeff_.begin(), coeff_.end(), [](gf64 c) { return c == 0; });
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& other) {
  require_same(*this, other);
  for (std::size_t z = 0; z < coeff_.size(); ++z) coeff_[z] ^= other.coeff_[z];
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::scale(gf64 s) {
  for (auto& c : coeff_) c = gf_mul(c, s);
  return *this;
}

GroupAlgebraElement ga_mul_naive(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  require_same(a, b);
  GroupAlgebraElement out(a.dimension());
  const auto n = static_cast<std::uint32_t>(a.size());
  for (std::uint32_t x = 0; x < n; ++x) {
    if (a[x] == 0) continue;
    for (std::uint32_t y = 0; y < n; ++y) {
      if (b[y] != 0) out[x ^ y] ^= gf_mul(a[x], b[y]);
    }
  }
  return out;
}

GroupAlgebraElement ga_mul_fast(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  require_same(a, b);
  const int k = a.dimension();
  if (k > kMaxFastDimension) throw std::invalid_argument("ga_mul_fast supports k <= 16");
  const std::size_t n = a.size();

  // Slice-major integer lifts, transformed in place.
  std::vector<std::int64_t> sliceA(kSlices * n);
  std::vector<std::int64_t> sliceB(kSlices * n);
#pragma omp parallel for schedule(static)
  for (int s = 0; s < kSlices; ++s) {
    std::int64_t* pa = sliceA.data() + s * n;
    std::int64_t* pb = sliceB.data() + s * n;
    for (std::size_t z = 0; z < n; ++z) {
      pa[z] = static_cast<std::int64_t>((a[static_cast<std::uint32_t>(z)] >> s) & 1);
      pb[z] = static_cast<std::int64_t>((b[static_cast<std::uint32_t>(z)] >> s) & 1);
    }
    wht(pa, n);
    wht(pb, n);
  }

  // Pointwise: for each group character, the integer polynomial product of the
  // two 64-term slice vectors. |entries| <= 64 * 4^k, and the inverse
  // transform multiplies by at most 2^k more, which fits in int64 for k <= 16.
  std::vector<std::int64_t> product(kProductSlices * n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t zi = 0; zi < static_cast<std::ptrdiff_t>(n); ++zi) {
    const auto z = static_cast<std::size_t>(zi);
    std::array<std::int64_t, kSlices> va{};
    std::array<std::int64_t, kSlices> vb{};
    for (int s = 0; s < kSlices; ++s) {
      va[s] = sliceA[s * n + z];
      vb[s] = sliceB[s * n + z];
    }
    std::array<std::int64_t, kProductSlices> acc{};
    for (int i = 0; i < kSlices; ++i) {
      if (va[i] == 0) continue;
      for (int j = 0; j < kSlices; ++j) acc[i + j] += va[i] * vb[j];
    }
    for (int d = 0; d < kProductSlices; ++d) product[d * n + z] = acc[d];
  }

  // Back-transform each degree slice; the XOR-convolution count is value >> k.
#pragma omp parallel for schedule(static)
  for (int d = 0; d < kProductSlices; ++d) {
    std::int64_t* p = product.data() + d * n;
    wht(p, n);
    for (std::size_t z = 0; z < n; ++z) p[z] = (p[z] >> k) & 1;
  }

  GroupAlgebraElement out(k);
  for (std::size_t z = 0; z < n; ++z) {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    for (int d = 0; d < kSlices; ++d) lo |= static_cast<std::uint64_t>(product[d * n + z]) << d;
    for (int d = kSlices; d < kProductSlices; ++d) hi |= static_cast<std::uint64_t>(product[d * n + z]) << (d - kSlices);
    out[static_cast<std::uint32_t>(z)] = gf_reduce(hi, lo);
  }
  return out;
}

GroupAlgebraElement ga_mul(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  require_same(a, b);
  return a.dimension() <= kNaiveMulMaxK ? ga_mul_naive(a, b) : ga_mul_fast(a, b);
}

GroupAlgebraElement ga_mul_binomial(const GroupAlgebraElement& a, std::uint32_t b) {
  if (b >= a.size()) throw std::invalid_argument("group member out of range");
  GroupAlgebraElement out(a.dimension());
  const auto n = static_cast<std::uint32_t>(a.size());
  for (std::uint32_t z = 0; z < n; ++z) out[z] = a[z] ^ a[z ^ b];
  return out;
}

}  // namespace covertree
