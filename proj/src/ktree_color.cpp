// Color-coding: random k-colorings of the host, each checked for a colorful
// embedding by a DP over (tree vertex, host vertex, color set).

#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <omp.h>

#include "covertree/errors.hpp"
#include "covertree/ktree.hpp"
#include "covertree/rng.hpp"

namespace covertree {

long long color_coding_trials(int k, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must lie in (0, 1)");
  const double t = std::ceil(std::exp(static_cast<double>(k)) * std::log(1.0 / delta));
  if (t > static_cast<double>(std::numeric_limits<long long>::max() / 2)) {
    throw GuardExceeded("color-coding trial count overflows");
  }
  return std::max(1LL, static_cast<long long>(t));
}

namespace {

using MaskList = std::vector<std::uint32_t>;

class ColorfulDp {
 public:
  ColorfulDp(const HostGraph& host, const PatternTree& tree, const EmbedOptions& opts)
      : host_(host), tree_(tree), opts_(opts), k_(tree.vertex_count()) {
    masks_.assign(static_cast<std::size_t>(k_), std::vector<MaskList>(static_cast<std::size_t>(host.vertex_count())));
    seen_.assign(std::size_t{1} << k_, 0);
    color_.resize(static_cast<std::size_t>(host.vertex_count()));
  }

  bool run(std::uint64_t coloringSeed) {
    Rng rng(coloringSeed);
    for (auto& c : color_) c = static_cast<int>(rng.below(static_cast<std::uint64_t>(k_)));

    const auto& pre = tree_.preorder();
    for (auto it = pre.rbegin(); it != pre.rend(); ++it) {
      const int t = *it;
      for (int u = 0; u < host_.vertex_count(); ++u) {
        MaskList& cur = masks_[t][u];
        cur.clear();
        if (!admissible(t, u)) continue;
        cur.push_back(std::uint32_t{1} << color_[u]);
        for (int c : tree_.children(t)) {
          const auto nbrs = tree_.arc_down(c) ? host_.out(u) : host_.in(u);
          gather(c, nbrs);
          combine(cur);
          if (cur.empty()) break;
        }
      }
    }
    for (int u = 0; u < host_.vertex_count(); ++u)
      if (!masks_[tree_.root()][u].empty()) return true;
    return false;
  }

 private:
  bool admissible(int t, int u) const {
    if (t == tree_.root() && opts_.anchor && *opts_.anchor != u) return false;
    return detail::class_admissible(host_, tree_, opts_, t, u);
  }

  /// Union of the child's color sets over the given host neighbors.
  void gather(int child, std::span<const int> nbrs) {
    childUnion_.clear();
    for (int w : nbrs) {
      for (std::uint32_t s : masks_[child][w]) {
        if (!seen_[s]) {
          seen_[s] = 1;
          childUnion_.push_back(s);
        }
      }
    }
    for (std::uint32_t s : childUnion_) seen_[s] = 0;
  }

  /// cur := { S | T : S in cur, T in childUnion_, S & T = 0 }.
  void combine(MaskList& cur) {
    scratch_.clear();
    for (std::uint32_t s : cur) {
      for (std::uint32_t t : childUnion_) {
        const std::uint32_t u = s | t;
        if ((s & t) == 0 && !seen_[u]) {
          seen_[u] = 1;
          scratch_.push_back(u);
        }
      }
    }
    for (std::uint32_t s : scratch_) seen_[s] = 0;
    cur.swap(scratch_);
  }

  const HostGraph& host_;
  const PatternTree& tree_;
  const EmbedOptions& opts_;
  int k_;
  std::vector<std::vector<MaskList>> masks_;
  std::vector<char> seen_;
  std::vector<int> color_;
  MaskList childUnion_;
  MaskList scratch_;
};

}  // namespace

SolveReport solve_color_coding(const HostGraph& host, const PatternTree& tree, const EmbedOptions& opts) {
  detail::check_inputs(host, tree, opts);
  const int k = tree.vertex_count();
  if (k > kColorCodingMaxK) {
    throw GuardExceeded("color coding supports k <= " + std::to_string(kColorCodingMaxK) + ", got " +
                        std::to_string(k));
  }
  const long long planned = color_coding_trials(k, opts.delta);

  Stopwatch clock;
  SolveReport report;
  report.backend = std::string(to_string(Backend::ColorCoding));
  report.seed = opts.seed;

  // Smallest successful coloring index; indices above it are skipped, so the
  // reported value does not depend on scheduling.
  std::atomic<long long> firstHit{std::numeric_limits<long long>::max()};
  if (k <= host.vertex_count()) {
    const int threads = opts.threads > 0 ? opts.threads : omp_get_max_threads();
#pragma omp parallel num_threads(threads)
    {
      ColorfulDp dp(host, tree, opts);
#pragma omp for schedule(dynamic, 8)
      for (long long i = 0; i < planned; ++i) {
        if (i > firstHit.load(std::memory_order_relaxed)) continue;
        if (dp.run(stream_seed(opts.seed, static_cast<std::uint64_t>(i)))) {
          long long prev = firstHit.load();
          while (i < prev && !firstHit.compare_exchange_weak(prev, i)) {
          }
        }
      }
    }
  }
  const long long hit = firstHit.load();
  const bool found = hit != std::numeric_limits<long long>::max();
  report.answer = found;
  report.trials = static_cast<int>(std::min<long long>(found ? hit + 1 : planned, std::numeric_limits<int>::max()));
  report.params = {{"k", k}, {"delta", opts.delta}, {"planned_trials", planned}};
  report.elapsed = clock.elapsed();
  return report;
}

}  // namespace covertree
