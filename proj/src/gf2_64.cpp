#include "covertree/gf2_64.hpp"

namespace covertree {

gf64 gf_mul_portable(gf64 a, gf64 b) {
  std::uint64_t hi = 0;
  std::uint64_t lo = 0;
  for (int i = 0; i < 64; ++i) {
    if ((b >> i) & 1) {
      lo ^= a << i;
      if (i != 0) hi ^= a >> (64 - i);
    }
  }
  return gf_reduce(hi, lo);
}

}  // namespace covertree
