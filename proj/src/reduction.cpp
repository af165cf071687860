#include "covertree/reduction.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "covertree/errors.hpp"

namespace covertree {

std::uint64_t binomial(int m, int g) {
  if (g < 0 || m < 0 || g > m) return 0;
  g = std::min(g, m - g);
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  unsigned __int128 acc = 1;
  for (int i = 1; i <= g; ++i) {
    acc = acc * static_cast<unsigned>(m - g + i) / static_cast<unsigned>(i);
    if (acc > kMax) return kMax;
  }
  return static_cast<std::uint64_t>(acc);
}

namespace {

void check_group_layer(const SetCoverInstance& sc, const ReductionParams& params, bool allowEmpty) {
  if (params.g < 1) throw ReductionRefused("g must be >= 1", 0);
  if (params.g > sc.m()) {
    if (allowEmpty) return;
    throw ReductionRefused("g = " + std::to_string(params.g) + " exceeds m = " + std::to_string(sc.m()) +
                               "; no g-subsets exist",
                           0);
  }
  const std::uint64_t groups = binomial(sc.m(), params.g);
  if (groups > params.groupCap) {
    throw ReductionRefused("group layer needs C(" + std::to_string(sc.m()) + "," + std::to_string(params.g) +
                               ") = " + std::to_string(groups) + " vertices, cap is " +
                               std::to_string(params.groupCap),
                           groups);
  }
}

/// Calls fn(subset) for each g-subset of {0..m-1} in lexicographic order.
template <class Fn>
void for_each_subset(int m, int g, Fn&& fn) {
  if (g > m || g < 1) return;
  std::vector<int> idx(static_cast<std::size_t>(g));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    fn(idx);
    int i = g - 1;
    while (i >= 0 && idx[i] == m - g + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < g; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Shared element/set/group layers of both host variants.
struct LayeredHost {
  int n = 0;
  int m = 0;
  int groups = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<VertexClass> classes;
  std::vector<std::vector<int>> payloads;

  int element(int j) const { return j; }
  int set(int i) const { return n + i; }
  int group(int x) const { return n + m + x; }

  int add(VertexClass c, std::vector<int> payload) {
    classes.push_back(c);
    payloads.push_back(std::move(payload));
    return static_cast<int>(classes.size()) - 1;
  }
};

LayeredHost build_layers(const SetCoverInstance& sc, int g) {
  LayeredHost h;
  h.n = sc.n;
  h.m = sc.m();
  for (int j = 0; j < sc.n; ++j) h.add(VertexClass::Element, {j});
  for (int i = 0; i < sc.m(); ++i) {
    h.add(VertexClass::Set, {i});
    for (int e : sc.sets[i]) h.edges.emplace_back(h.set(i), h.element(e));
  }
  std::vector<char> covered(static_cast<std::size_t>(sc.n));
  for_each_subset(sc.m(), g, [&](const std::vector<int>& subset) {
    const int x = h.add(VertexClass::Group, subset);
    std::fill(covered.begin(), covered.end(), 0);
    for (int i : subset)
      for (int e : sc.sets[i]) covered[e] = 1;
    for (int j = 0; j < sc.n; ++j)
      if (covered[j]) h.edges.emplace_back(x, h.element(j));
    ++h.groups;
  });
  return h;
}

/// Collects tree vertices in creation order, then renumbers them by class so
/// that builds are reproducible and match the host's class-major layout.
class TreeAssembler {
 public:
  int add(VertexClass c, int parent) {
    classes_.push_back(c);
    parent_.push_back(parent);
    return static_cast<int>(classes_.size()) - 1;
  }

  PatternTree finish(int root, bool directed) const {
    const int n = static_cast<int>(classes_.size());
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return classes_[a] < classes_[b]; });
    std::vector<int> newId(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) newId[order[i]] = i;
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::vector<VertexClass> classes(static_cast<std::size_t>(n));
    for (int old = 0; old < n; ++old) {
      parent[newId[old]] = parent_[old] < 0 ? -1 : newId[parent_[old]];
      classes[newId[old]] = classes_[old];
    }
    return PatternTree(std::move(parent), newId[root], directed, {}, std::move(classes));
  }

 private:
  std::vector<VertexClass> classes_;
  std::vector<int> parent_;
};

void add_star(TreeAssembler& t, VertexClass centerClass, int parent, int leaves) {
  const int center = t.add(centerClass, parent);
  for (int i = 0; i < leaves; ++i) t.add(VertexClass::Element, center);
}

void require_sum(const Partition& alpha, int expected, const char* what) {
  int sum = 0;
  for (int x : alpha.parts) {
    if (x < 1) throw std::invalid_argument("partition parts must be positive");
    sum += x;
  }
  if (sum != expected) {
    throw std::invalid_argument(std::string("partition sums to ") + std::to_string(sum) + ", expected " + what +
                                " = " + std::to_string(expected));
  }
}

}  // namespace

HostGraph build_host_undirected(const SetCoverInstance& sc, const ReductionParams& params) {
  check_group_layer(sc, params, false);
  LayeredHost h = build_layers(sc, params.g);
  const int rho = params.rho(sc.n);

  std::vector<std::vector<int>> guards(4);
  const VertexClass guardClass[4] = {VertexClass::GuardR1, VertexClass::GuardR2, VertexClass::GuardR3,
                                     VertexClass::GuardR4};
  for (int col = 0; col < 4; ++col)
    for (int j = 0; j < rho; ++j) guards[col].push_back(h.add(guardClass[col], {j}));
  const int r = h.add(VertexClass::RootR, {});
  const int rg = h.add(VertexClass::RootRg, {});
  const int r1 = h.add(VertexClass::RootR1, {});
  const int r2 = h.add(VertexClass::RootR2, {});

  for (int x = 0; x < h.groups; ++x) h.edges.emplace_back(rg, h.group(x));
  for (int v : guards[3]) h.edges.emplace_back(rg, v);
  for (int v : guards[0]) h.edges.emplace_back(r1, v);
  for (int v : guards[1]) h.edges.emplace_back(r2, v);
  h.edges.emplace_back(r, rg);
  h.edges.emplace_back(r, r1);
  h.edges.emplace_back(r, r2);
  for (int i = 0; i < h.m; ++i) h.edges.emplace_back(r, h.set(i));
  for (int v : guards[2]) h.edges.emplace_back(r, v);

  const int count = static_cast<int>(h.classes.size());
  return HostGraph(count, false, h.edges, std::move(h.classes), std::move(h.payloads));
}

PatternTree build_tree_undirected(const Partition& alpha, const ReductionParams& params, int n) {
  require_sum(alpha, n, "n");
  if (params.g < 1) throw std::invalid_argument("g must be >= 1");
  const ShrunkPartition s = shrink(alpha, params.g);
  const int rho = params.rho(n);

  TreeAssembler t;
  const int r = t.add(VertexClass::RootR, -1);
  const int rg = t.add(VertexClass::RootRg, r);
  const int r1 = t.add(VertexClass::RootR1, r);
  const int r2 = t.add(VertexClass::RootR2, r);
  for (int j = 0; j < rho; ++j) t.add(VertexClass::GuardR1, r1);
  for (int j = 0; j < rho; ++j) t.add(VertexClass::GuardR2, r2);
  for (int j = 0; j < rho; ++j) t.add(VertexClass::GuardR3, r);
  for (int j = 0; j < rho; ++j) t.add(VertexClass::GuardR4, rg);
  for (int part : s.tail) add_star(t, VertexClass::Set, r, part);
  for (int part : s.grouped) add_star(t, VertexClass::Group, rg, part);
  return t.finish(r, false);
}

HostGraph build_host_directed(const SetCoverInstance& sc, const ReductionParams& params) {
  check_group_layer(sc, params, true);
  LayeredHost h = build_layers(sc, params.g);
  const int r = h.add(VertexClass::RootR, {});
  const int rg = h.add(VertexClass::RootRg, {});
  for (int i = 0; i < h.m; ++i) h.edges.emplace_back(r, h.set(i));
  h.edges.emplace_back(r, rg);
  for (int x = 0; x < h.groups; ++x) h.edges.emplace_back(rg, h.group(x));

  const int count = static_cast<int>(h.classes.size());
  return HostGraph(count, true, h.edges, std::move(h.classes), std::move(h.payloads));
}

PatternTree build_tree_directed(const Partition& alpha, const ReductionParams& params) {
  require_sum(alpha, alpha.target, "its target");
  if (params.g < 1) throw std::invalid_argument("g must be >= 1");
  const ShrunkPartition s = shrink(alpha, params.g);

  TreeAssembler t;
  const int r = t.add(VertexClass::RootR, -1);
  const int rg = t.add(VertexClass::RootRg, r);
  for (int part : s.tail) add_star(t, VertexClass::Set, r, part);
  for (int part : s.grouped) add_star(t, VertexClass::Group, rg, part);
  return t.finish(r, true);
}

std::pair<HostGraph, PatternTree> undirected_to_directed(const HostGraph& host, const PatternTree& tree) {
  if (host.directed() || tree.directed()) throw std::invalid_argument("undirected_to_directed: inputs must be undirected");
  std::vector<std::pair<int, int>> arcs;
  arcs.reserve(host.edge_count() * 2);
  for (const auto& [a, b] : host.edges()) {
    arcs.emplace_back(a, b);
    arcs.emplace_back(b, a);
  }
  std::vector<std::vector<int>> payloads;
  payloads.reserve(static_cast<std::size_t>(host.vertex_count()));
  for (int v = 0; v < host.vertex_count(); ++v) payloads.push_back(host.payload(v));
  HostGraph directedHost(host.vertex_count(), true, arcs, host.classes(), std::move(payloads));

  std::vector<int> parent(static_cast<std::size_t>(tree.vertex_count()));
  for (int v = 0; v < tree.vertex_count(); ++v) parent[v] = tree.parent(v);
  PatternTree arborescence(std::move(parent), tree.root(), true, {}, tree.classes());
  return {std::move(directedHost), std::move(arborescence)};
}

bool check_assumption1(const SetCoverInstance& sc, const ReductionParams& params) {
  const auto g2 = static_cast<long long>(params.g) * params.g;
  return std::all_of(sc.sets.begin(), sc.sets.end(),
                     [&](const std::vector<int>& s) { return static_cast<long long>(s.size()) * g2 <= sc.n; });
}

std::vector<int> sets_from_embedding(const HostGraph& host, const PatternTree& tree, const std::vector<int>& mapping) {
  std::vector<int> sets;
  for (int t = 0; t < tree.vertex_count(); ++t) {
    const VertexClass c = tree.vertex_class(t);
    if (c != VertexClass::Set && c != VertexClass::Group) continue;
    const int u = mapping[t];
    const VertexClass hc = host.vertex_class(u);
    if (hc != VertexClass::Set && hc != VertexClass::Group) continue;
    const auto& payload = host.payload(u);
    sets.insert(sets.end(), payload.begin(), payload.end());
  }
  std::sort(sets.begin(), sets.end());
  return sets;
}

PartialCoverInstance literal_mode_counterexample(int g) {
  if (g < 1) throw std::invalid_argument("literal_mode_counterexample: g must be >= 1");
  PartialCoverInstance pc;
  pc.base.n = g + 1;
  for (int j = 0; j <= g; ++j) pc.base.sets.push_back({j});
  pc.p = g + 1;
  return pc;
}

}  // namespace covertree
