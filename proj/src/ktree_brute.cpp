// Exact backtracking embedder.
//
// Internal tree vertices are placed in preorder, each among the unused
// neighbors of its parent's image. Leaves are not searched: once every
// internal vertex is placed, the leaves form a bipartite matching problem
// against the free neighbors of their parents' images. Identical sibling
// subtrees are placed with increasing host ids.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "covertree/errors.hpp"
#include "covertree/ktree.hpp"

namespace covertree {

std::string_view to_string(Backend b) {
  switch (b) {
    case Backend::Brute:
      return "brute";
    case Backend::ColorCoding:
      return "color";
    case Backend::Algebraic:
      return "algebraic";
  }
  return "?";
}

std::optional<Backend> backend_from_string(std::string_view name) {
  if (name == "brute") return Backend::Brute;
  if (name == "color") return Backend::ColorCoding;
  if (name == "algebraic") return Backend::Algebraic;
  return std::nullopt;
}

namespace detail {

void check_inputs(const HostGraph& host, const PatternTree& tree, const EmbedOptions& opts) {
  if (host.directed() != tree.directed()) {
    throw std::invalid_argument("host and tree must agree on directedness");
  }
  if (opts.anchor && (*opts.anchor < 0 || *opts.anchor >= host.vertex_count())) {
    throw std::invalid_argument("anchor is not a host vertex");
  }
}

}  // namespace detail

bool verify_embedding(const HostGraph& host, const PatternTree& tree, const std::vector<int>& mapping,
                      const EmbedOptions& opts) {
  if (static_cast<int>(mapping.size()) != tree.vertex_count()) return false;
  std::vector<char> used(static_cast<std::size_t>(host.vertex_count()), 0);
  for (int t = 0; t < tree.vertex_count(); ++t) {
    const int u = mapping[t];
    if (u < 0 || u >= host.vertex_count() || used[u]) return false;
    used[u] = 1;
    if (!detail::class_admissible(host, tree, opts, t, u)) return false;
  }
  if (opts.anchor && mapping[tree.root()] != *opts.anchor) return false;
  for (const auto& [a, b] : tree.arcs()) {
    if (!host.has_arc(mapping[a], mapping[b])) return false;
  }
  return true;
}

namespace {

class BruteSearch {
 public:
  BruteSearch(const HostGraph& host, const PatternTree& tree, const EmbedOptions& opts)
      : host_(host), tree_(tree), opts_(opts) {
    const int k = tree.vertex_count();
    map_.assign(static_cast<std::size_t>(k), -1);
    used_.assign(static_cast<std::size_t>(host.vertex_count()), 0);
    needOut_.assign(static_cast<std::size_t>(k), 0);
    needIn_.assign(static_cast<std::size_t>(k), 0);
    leafDown_.assign(static_cast<std::size_t>(k), 0);
    leafUp_.assign(static_cast<std::size_t>(k), 0);

    for (int t : tree.preorder()) {
      const bool leaf = t != tree.root() && tree.children(t).empty();
      if (leaf) {
        leaves_.push_back(t);
        (tree.arc_down(t) ? leafDown_ : leafUp_)[tree.parent(t)]++;
      } else {
        internal_.push_back(t);
      }
      for (int c : tree.children(t)) (tree.arc_down(c) ? needOut_ : needIn_)[t]++;
      if (t != tree.root()) (tree.arc_down(t) ? needIn_ : needOut_)[t]++;
    }
    compute_symmetry();
  }

  bool run() { return place(0); }
  const std::vector<int>& mapping() const { return map_; }

 private:
  void compute_symmetry() {
    const int k = tree_.vertex_count();
    std::vector<int> code(static_cast<std::size_t>(k), 0);
    std::map<std::vector<int>, int> ids;
    const auto& pre = tree_.preorder();
    for (auto it = pre.rbegin(); it != pre.rend(); ++it) {
      const int t = *it;
      std::vector<int> key;
      key.push_back(opts_.classConstrained ? static_cast<int>(tree_.vertex_class(t)) : 0);
      key.push_back(tree_.directed() && t != tree_.root() ? static_cast<int>(tree_.arc_down(t)) : 0);
      std::vector<int> kids;
      for (int c : tree_.children(t)) kids.push_back(code[c]);
      std::sort(kids.begin(), kids.end());
      key.insert(key.end(), kids.begin(), kids.end());
      code[t] = ids.emplace(std::move(key), static_cast<int>(ids.size())).first->second;
    }
    symPrev_.assign(static_cast<std::size_t>(k), -1);
    for (int t = 0; t < k; ++t) {
      std::map<int, int> last;
      for (int c : tree_.children(t)) {
        if (tree_.children(c).empty()) continue;
        auto found = last.find(code[c]);
        if (found != last.end()) symPrev_[c] = found->second;
        last[code[c]] = c;
      }
    }
  }

  bool degree_ok(int t, int u) const {
    if (!host_.directed()) return host_.degree(u) >= needOut_[t] + needIn_[t];
    return host_.out_degree(u) >= needOut_[t] && host_.in_degree(u) >= needIn_[t];
  }

  /// Free neighbors that at least one of t's leaf children (in this direction) could take.
  int free_for_leaves(int t, std::span<const int> nbrs, bool down) const {
    int count = 0;
    for (int w : nbrs) {
      if (used_[w]) continue;
      if (!opts_.classConstrained) {
        ++count;
        continue;
      }
      for (int c : tree_.children(t)) {
        if (tree_.children(c).empty() && tree_.arc_down(c) == down && tree_.vertex_class(c) == host_.vertex_class(w)) {
          ++count;
          break;
        }
      }
    }
    return count;
  }

  /// Necessary condition for t's leaf children after placing t at u.
  bool leaves_fit(int t, int u) const {
    if (leafDown_[t] > 0 && free_for_leaves(t, host_.out(u), true) < leafDown_[t]) return false;
    if (leafUp_[t] > 0 && free_for_leaves(t, host_.in(u), false) < leafUp_[t]) return false;
    return true;
  }

  bool try_vertex(std::size_t idx, int t, int u) {
    if (used_[u] || !detail::class_admissible(host_, tree_, opts_, t, u) || !degree_ok(t, u)) return false;
    if (symPrev_[t] >= 0 && u <= map_[symPrev_[t]]) return false;
    map_[t] = u;
    used_[u] = 1;
    if (leaves_fit(t, u) && place(idx + 1)) return true;
    used_[u] = 0;
    map_[t] = -1;
    return false;
  }

  bool place(std::size_t idx) {
    if (idx == internal_.size()) return match_leaves();
    const int t = internal_[idx];
    if (t == tree_.root()) {
      if (opts_.anchor) return try_vertex(idx, t, *opts_.anchor);
      for (int u = 0; u < host_.vertex_count(); ++u)
        if (try_vertex(idx, t, u)) return true;
      return false;
    }
    const int p = map_[tree_.parent(t)];
    const auto nbrs = tree_.arc_down(t) ? host_.out(p) : host_.in(p);
    for (int u : nbrs)
      if (try_vertex(idx, t, u)) return true;
    return false;
  }

  std::span<const int> leaf_candidates(int leaf) const {
    const int p = map_[tree_.parent(leaf)];
    return tree_.arc_down(leaf) ? host_.out(p) : host_.in(p);
  }

  bool augment(int li, std::vector<int>& owner, std::vector<char>& seen) {
    const int leaf = leaves_[li];
    for (int w : leaf_candidates(leaf)) {
      if (used_[w] || seen[w] || !detail::class_admissible(host_, tree_, opts_, leaf, w)) continue;
      seen[w] = 1;
      if (owner[w] < 0 || augment(owner[w], owner, seen)) {
        owner[w] = li;
        return true;
      }
    }
    return false;
  }

  bool match_leaves() {
    std::vector<int> owner(static_cast<std::size_t>(host_.vertex_count()), -1);
    std::vector<char> seen(static_cast<std::size_t>(host_.vertex_count()));
    for (int li = 0; li < static_cast<int>(leaves_.size()); ++li) {
      std::fill(seen.begin(), seen.end(), 0);
      if (!augment(li, owner, seen)) return false;
    }
    for (int w = 0; w < host_.vertex_count(); ++w) {
      if (owner[w] >= 0) map_[leaves_[owner[w]]] = w;
    }
    return true;
  }

  const HostGraph& host_;
  const PatternTree& tree_;
  const EmbedOptions& opts_;
  std::vector<int> internal_;
  std::vector<int> leaves_;
  std::vector<int> needOut_;
  std::vector<int> needIn_;
  std::vector<int> leafDown_;
  std::vector<int> leafUp_;
  std::vector<int> symPrev_;
  std::vector<int> map_;
  std::vector<char> used_;
};

}  // namespace

SolveReport solve_brute(const HostGraph& host, const PatternTree& tree, const EmbedOptions& opts) {
  detail::check_inputs(host, tree, opts);
  if (tree.vertex_count() > opts.bruteLimit) {
    throw GuardExceeded("brute-force oracle limit is " + std::to_string(opts.bruteLimit) + " tree vertices, got " +
                        std::to_string(tree.vertex_count()));
  }
  Stopwatch clock;
  SolveReport report;
  report.backend = std::string(to_string(Backend::Brute));
  report.seed = opts.seed;
  report.trials = 1;
  BruteSearch search(host, tree, opts);
  const bool found = tree.vertex_count() <= host.vertex_count() && search.run();
  report.answer = found;
  if (found) {
    report.witness = search.mapping();
    if (!verify_embedding(host, tree, *report.witness, opts)) {
      throw std::logic_error("brute-force witness failed verification");
    }
  }
  report.params = {{"k", tree.vertex_count()}, {"host_vertices", host.vertex_count()}};
  report.elapsed = clock.elapsed();
  return report;
}

SolveReport solve(Backend backend, const HostGraph& host, const PatternTree& tree, const EmbedOptions& opts) {
  switch (backend) {
    case Backend::Brute:
      return solve_brute(host, tree, opts);
    case Backend::ColorCoding:
      return solve_color_coding(host, tree, opts);
    case Backend::Algebraic:
      return solve_algebraic(host, tree, opts);
  }
  throw std::invalid_argument("unknown backend");
}

}  // namespace covertree
