#include "covertree/cover.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/dynamic_bitset.hpp>

#include "covertree/errors.hpp"

namespace covertree {

namespace {

constexpr std::uint8_t kUnreachable = std::numeric_limits<std::uint8_t>::max();

void check_dp_size(int n) {
  if (n > kDpMaxN) {
    throw GuardExceeded("subset table supports n <= " + std::to_string(kDpMaxN) + ", got " + std::to_string(n));
  }
}

std::vector<std::uint32_t> set_masks(const SetCoverInstance& sc) {
  check_dp_size(sc.n);
  std::vector<std::uint32_t> masks;
  masks.reserve(sc.sets.size());
  for (const auto& s : sc.sets) {
    std::uint32_t mask = 0;
    for (int e : s) mask |= std::uint32_t{1} << e;
    masks.push_back(mask);
  }
  return masks;
}

/// cost[S] = fewest sets whose union contains S. The set chosen for the
/// lowest element of S is enough to enumerate.
class CoverTable {
 public:
  explicit CoverTable(const SetCoverInstance& sc) : masks_(set_masks(sc)) {
    const std::uint32_t full = (std::uint32_t{1} << sc.n) - 1;
    byLowest_.resize(static_cast<std::size_t>(sc.n));
    for (int i = 0; i < static_cast<int>(masks_.size()); ++i)
      for (int e = 0; e < sc.n; ++e)
        if (masks_[i] >> e & 1) byLowest_[e].push_back(i);
    cost_.assign(std::size_t{full} + 1, kUnreachable);
    cost_[0] = 0;
    for (std::uint32_t s = 1; s <= full; ++s) {
      const int low = std::countr_zero(s);
      std::uint8_t best = kUnreachable;
      for (int i : byLowest_[low]) {
        const std::uint8_t rest = cost_[s & ~masks_[i]];
        if (rest != kUnreachable && rest + 1 < best) best = static_cast<std::uint8_t>(rest + 1);
      }
      cost_[s] = best;
    }
  }

  std::uint8_t cost(std::uint32_t s) const { return cost_[s]; }
  std::size_t size() const { return cost_.size(); }

  /// Set indices of an optimal cover of s, sorted.
  std::vector<int> witness(std::uint32_t s) const {
    std::vector<int> out;
    while (s != 0) {
      const int low = std::countr_zero(s);
      for (int i : byLowest_[low]) {
        if (cost_[s & ~masks_[i]] + 1 == cost_[s]) {
          out.push_back(i);
          s &= ~masks_[i];
          break;
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::vector<std::uint32_t> masks_;
  std::vector<std::vector<int>> byLowest_;
  std::vector<std::uint8_t> cost_;
};

SolveReport make_report(const char* method) {
  SolveReport r;
  r.backend = method;
  r.answer = Infeasible{};
  return r;
}

/// Elements not in `fixed`, renumbered, with every set restricted to them.
SetCoverInstance residual(const SetCoverInstance& sc, const std::vector<int>& fixed) {
  std::vector<int> index(static_cast<std::size_t>(sc.n), -1);
  std::vector<char> gone(static_cast<std::size_t>(sc.n), 0);
  for (int e : fixed) gone[e] = 1;
  SetCoverInstance out;
  for (int e = 0; e < sc.n; ++e)
    if (!gone[e]) index[e] = out.n++;
  for (const auto& s : sc.sets) {
    std::vector<int> r;
    for (int e : s)
      if (index[e] >= 0) r.push_back(index[e]);
    out.sets.push_back(std::move(r));
  }
  return out;
}

}  // namespace

SolveReport dp_set_cover(const SetCoverInstance& sc) {
  Stopwatch clock;
  SolveReport r = make_report("dp");
  const CoverTable table(sc);
  const std::uint32_t full = static_cast<std::uint32_t>(table.size() - 1);
  if (table.cost(full) != kUnreachable) {
    r.answer = static_cast<long long>(table.cost(full));
    r.witness = table.witness(full);
  }
  r.params = {{"n", sc.n}, {"m", sc.m()}};
  r.elapsed = clock.elapsed();
  return r;
}

SolveReport dp_partial_cover(const PartialCoverInstance& pc) {
  if (pc.p < 1 || pc.p > pc.base.n) {
    throw std::invalid_argument("p must lie in [1, n], got p=" + std::to_string(pc.p));
  }
  Stopwatch clock;
  SolveReport r = make_report("dp");
  const CoverTable table(pc.base);
  // cost is monotone under inclusion, so targets of exactly p elements suffice.
  std::uint32_t bestSet = 0;
  std::uint8_t best = kUnreachable;
  for (std::uint32_t s = 0; s < table.size(); ++s) {
    if (std::popcount(s) == pc.p && table.cost(s) < best) {
      best = table.cost(s);
      bestSet = s;
    }
  }
  if (best != kUnreachable) {
    r.answer = static_cast<long long>(best);
    r.witness = table.witness(bestSet);
  }
  r.params = {{"n", pc.base.n}, {"m", pc.base.m()}, {"p", pc.p}};
  r.elapsed = clock.elapsed();
  return r;
}

std::optional<SolveReport> large_set_handler(const SetCoverInstance& sc, int g) {
  if (g < 1) throw std::invalid_argument("g must be >= 1");
  Stopwatch clock;
  std::optional<SolveReport> best;
  const long long g2 = static_cast<long long>(g) * g;
  for (int i = 0; i < sc.m(); ++i) {
    const auto& big = sc.sets[i];
    if (static_cast<long long>(big.size()) * g2 < sc.n) continue;
    const SetCoverInstance rest = residual(sc, big);
    const SolveReport sub = dp_set_cover(rest);
    if (!sub.optimum()) continue;
    const long long value = *sub.optimum() + 1;
    if (best && *best->optimum() <= value) continue;
    SolveReport r = make_report("large-set");
    r.answer = value;
    std::vector<int> w = *sub.witness;
    w.push_back(i);
    std::sort(w.begin(), w.end());
    w.erase(std::unique(w.begin(), w.end()), w.end());
    r.witness = std::move(w);
    best = std::move(r);
  }
  if (best) {
    best->params = {{"g", g}};
    best->elapsed = clock.elapsed();
  }
  return best;
}

std::optional<SolveReport> small_solution_handler(const SetCoverInstance& sc, int g) {
  if (g < 1) throw std::invalid_argument("g must be >= 1");
  Stopwatch clock;
  std::vector<boost::dynamic_bitset<>> bits;
  for (const auto& s : sc.sets) {
    boost::dynamic_bitset<> b(static_cast<std::size_t>(sc.n));
    for (int e : s) b.set(static_cast<std::size_t>(e));
    bits.push_back(std::move(b));
  }
  const int maxSize = std::min(g - 1, sc.m());
  for (int size = 0; size <= maxSize; ++size) {
    // Lexicographic combinations of `size` set indices.
    std::vector<int> pick(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      boost::dynamic_bitset<> u(static_cast<std::size_t>(sc.n));
      for (int i : pick) u |= bits[i];
      if (u.all()) {
        SolveReport r = make_report("small-solution");
        r.answer = static_cast<long long>(size);
        r.witness = pick;
        r.params = {{"g", g}};
        r.elapsed = clock.elapsed();
        return r;
      }
      int j = size - 1;
      while (j >= 0 && pick[j] == sc.m() - size + j) --j;
      if (j < 0) break;
      ++pick[j];
      for (int t = j + 1; t < size; ++t) pick[t] = pick[t - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace covertree
