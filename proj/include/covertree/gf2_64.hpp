#pragma once

// GF(2^64) with modulus x^64 + x^4 + x^3 + x + 1. Elements are bit vectors of
// polynomial coefficients (bit i = coefficient of x^i); addition is XOR.

#include <cstdint>

#if defined(__PCLMUL__)
#include <immintrin.h>
#endif

namespace covertree {

using gf64 = std::uint64_t;

/// Low four terms of the modulus: x^64 = x^4 + x^3 + x + 1.
inline constexpr gf64 kGfModulusLow = 0x1b;

/// Shift-and-add reference multiplier.
gf64 gf_mul_portable(gf64 a, gf64 b);

/// Reduces the 128-bit product hi*x^64 + lo.
constexpr gf64 gf_reduce(std::uint64_t hi, std::uint64_t lo) {
  // hi*x^64 = hi*(x^4+x^3+x+1); the spill above x^63 is at most 4 bits.
  const std::uint64_t spill = (hi >> 60) ^ (hi >> 61) ^ (hi >> 63);
  const std::uint64_t folded = hi ^ (hi << 1) ^ (hi << 3) ^ (hi << 4);
  const std::uint64_t spillFolded = spill ^ (spill << 1) ^ (spill << 3) ^ (spill << 4);
  return lo ^ folded ^ spillFolded;
}

/// Carry-less product reduced modulo the field polynomial. Uses PCLMULQDQ
/// when compiled with it, otherwise gf_mul_portable.
inline gf64 gf_mul(gf64 a, gf64 b) {
#if defined(__PCLMUL__)
  const __m128i prod = _mm_clmulepi64_si128(_mm_cvtsi64_si128(static_cast<long long>(a)),
                                            _mm_cvtsi64_si128(static_cast<long long>(b)), 0x00);
  const auto lo = static_cast<std::uint64_t>(_mm_cvtsi128_si64(prod));
  const auto hi = static_cast<std::uint64_t>(_mm_cvtsi128_si64(_mm_unpackhi_epi64(prod, prod)));
  return gf_reduce(hi, lo);
#else
  return gf_mul_portable(a, b);
#endif
}

}  // namespace covertree
