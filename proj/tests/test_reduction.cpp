#include <doctest.h>

#include "covertree/cover.hpp"
#include "covertree/errors.hpp"
#include "covertree/ktree.hpp"
#include "covertree/pipeline.hpp"
#include "covertree/reduction.hpp"
#include "covertree/rng.hpp"
#include "oracles.hpp"

using namespace covertree;

namespace {

ReductionParams width(int g) {
  ReductionParams p;
  p.g = g;
  return p;
}

int vertex_of(const HostGraph& h, VertexClass c) { return *h.find_class(c); }

int tree_size_formula(const Partition& alpha, int g, int n) {
  const int l = alpha.size();
  return 4 + 4 * width(g).rho(n) + l / g + l % g + n;
}

EmbedOptions exact() {
  EmbedOptions o;
  o.bruteLimit = 1000;
  return o;
}

}  // namespace

TEST_CASE("undirected host: two singletons at g = 2") {
  const SetCoverInstance sc{2, {{0}, {1}}};
  const HostGraph h = build_host_undirected(sc, width(2));
  // 2 elements + 2 sets + 1 group + 4 guard columns of length 2 + 4 roots.
  CHECK(h.vertex_count() == 17);
  CHECK(h.degree(vertex_of(h, VertexClass::RootR)) == 7);
  CHECK_FALSE(h.directed());
}

TEST_CASE("undirected host degree facts") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Rng rng(seed);
    const int n = static_cast<int>(rng.uniform_int(2, 9));
    const int m = static_cast<int>(rng.uniform_int(2, 6));
    const int g = static_cast<int>(rng.uniform_int(1, m));
    const auto sc = random_instance(n, m, std::min(n, 3), seed);
    const auto params = width(g);
    const int rho = params.rho(n);
    const HostGraph h = build_host_undirected(sc, params);
    CHECK(h.vertex_count() == n + m + static_cast<int>(binomial(m, g)) + 4 * rho + 4);
    for (int v = 0; v < h.vertex_count(); ++v) {
      switch (h.vertex_class(v)) {
        case VertexClass::GuardR1:
        case VertexClass::GuardR2:
        case VertexClass::GuardR3:
        case VertexClass::GuardR4:
          CHECK(h.degree(v) == 1);
          break;
        case VertexClass::RootR:
          CHECK(h.degree(v) == 3 + m + rho);
          break;
        case VertexClass::RootR1:
        case VertexClass::RootR2:
          CHECK(h.degree(v) == rho + 1);
          break;
        case VertexClass::RootRg:
          CHECK(h.degree(v) == static_cast<int>(binomial(m, g)) + rho + 1);
          break;
        case VertexClass::Set:
          CHECK(h.degree(v) == 1 + static_cast<int>(sc.sets[h.payload(v)[0]].size()));
          break;
        case VertexClass::Group: {
          std::vector<char> hit(static_cast<std::size_t>(n), 0);
          int covered = 0;
          for (int i : h.payload(v))
            for (int e : sc.sets[i]) covered += hit[e] ? 0 : (hit[e] = 1);
          CHECK(h.degree(v) == 1 + covered);
          break;
        }
        default:
          break;
      }
    }
  }
}

TEST_CASE("undirected host refuses") {
  const SetCoverInstance sc{4, {{0, 1}, {2}, {3}}};
  CHECK_THROWS_AS(build_host_undirected(sc, width(4)), ReductionRefused);
  ReductionParams capped = width(2);
  capped.groupCap = 2;
  try {
    build_host_undirected(sc, capped);
    FAIL("expected a refusal");
  } catch (const ReductionRefused& e) {
    CHECK(e.required_cap() == 3);
  }
  CHECK(binomial(60, 30) == 118264581564861424ULL);
  CHECK(binomial(200, 100) == UINT64_MAX);
}

TEST_CASE("undirected trees") {
  // alpha = (n) with n < g: one tail star under the root.
  const auto t = build_tree_undirected(make_partition({3}), width(5), 3);
  CHECK(t.count_class(VertexClass::Set) == 1);
  CHECK(t.count_class(VertexClass::Group) == 0);
  CHECK(t.count_class(VertexClass::Element) == 3);

  // All ones at g = 2.
  for (int n = 1; n <= 9; ++n) {
    const auto ones = build_tree_undirected(make_partition(std::vector<int>(static_cast<std::size_t>(n), 1)), width(2), n);
    CHECK(ones.count_class(VertexClass::Group) == n / 2);
    CHECK(ones.count_class(VertexClass::Set) == n % 2);
    for (int v = 0; v < ones.vertex_count(); ++v)
      if (ones.vertex_class(v) == VertexClass::Group) CHECK(ones.children(v).size() == 2);
  }

  for (int n = 1; n <= 16; ++n) {
    for (int g = 1; g <= 9; ++g) {
      for (const auto& alpha : enumerate_partitions(n)) {
        const auto tree = build_tree_undirected(alpha, width(g), n);
        CHECK(tree.vertex_count() == tree_size_formula(alpha, g, n));
        CHECK(tree.arcs().size() == static_cast<std::size_t>(tree.vertex_count() - 1));
        CHECK(tree.count_class(VertexClass::Element) == n);
        // Exact worst case: rho <= (2n+g-1)/g and at most n/g + g - 1 centers.
        CHECK(tree.vertex_count() * g <= n * (g + 9) + g * (g + 7));
      }
    }
  }
  CHECK_THROWS_AS(build_tree_undirected(make_partition({2, 1}), width(2), 4), std::invalid_argument);
}

TEST_CASE("tree size at n = 18, g = 9 exceeds 2n + 8 for many small parts") {
  std::vector<int> parts{11, 1, 1, 1, 1, 1, 1, 1};
  const auto tree = build_tree_undirected(make_partition(parts), width(9), 18);
  CHECK(tree.vertex_count() == 46);
  CHECK(tree.vertex_count() <= 18 * 2 + 9 + 7);
  // The single-part tree stays within the bound.
  CHECK(build_tree_undirected(make_partition({18}), width(9), 18).vertex_count() <= 44);
}

TEST_CASE("directed host") {
  const SetCoverInstance sc{2, {{0}, {1}}};
  const HostGraph h = build_host_directed(sc, width(2));
  CHECK(h.vertex_count() == 7);
  CHECK(h.out_degree(vertex_of(h, VertexClass::RootR)) == 3);
  CHECK(h.out_degree(vertex_of(h, VertexClass::RootRg)) == 1);
  for (int v = 0; v < h.vertex_count(); ++v)
    if (h.vertex_class(v) == VertexClass::Element) CHECK(h.out_degree(v) == 0);

  // A group layer wider than m is empty rather than refused.
  const HostGraph wide = build_host_directed(sc, width(7));
  CHECK(wide.vertex_count() == 6);
  CHECK(wide.out_degree(vertex_of(wide, VertexClass::RootRg)) == 0);
}

TEST_CASE("directed trees") {
  const auto single = build_tree_directed(make_partition({3}), width(5));
  CHECK(single.vertex_count() == 6);
  CHECK(single.children(vertex_of(single.as_graph(), VertexClass::RootRg)).empty());

  const auto pair = build_tree_directed(make_partition({1, 1}), width(3));
  CHECK(pair.vertex_count() == 6);
  CHECK(pair.count_class(VertexClass::Set) == 2);

  for (int p = 1; p <= 14; ++p) {
    for (int g = 1; g <= 8; ++g) {
      for (const auto& alpha : enumerate_partitions(p)) {
        const auto tree = build_tree_directed(alpha, width(g));
        const int centers = tree.count_class(VertexClass::Set) + tree.count_class(VertexClass::Group);
        CHECK(centers == alpha.size() / g + alpha.size() % g);
        CHECK(tree.count_class(VertexClass::Set) < g);
        CHECK(tree.count_class(VertexClass::Element) == p);
        CHECK(tree.vertex_count() * g <= p * g + p + g * g + 2 * g);
        for (const auto& [a, b] : tree.arcs()) CHECK(tree.parent(b) == a);
      }
    }
  }
}

TEST_CASE("undirected_to_directed") {
  const HostGraph edge(2, false, {{0, 1}});
  const PatternTree path({-1, 0, 1}, 0, false);
  const auto [h, t] = undirected_to_directed(edge, path);
  CHECK(h.directed());
  CHECK(h.has_arc(0, 1));
  CHECK(h.has_arc(1, 0));
  CHECK(t.arcs() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  CHECK_THROWS_AS(undirected_to_directed(h, t), std::invalid_argument);
}

TEST_CASE("check_assumption1") {
  CHECK(check_assumption1({9, {{0}, {1}, {2}}}, width(3)));
  CHECK_FALSE(check_assumption1({9, {{0}, {1, 2}}}, width(3)));
  std::vector<int> eleven(11);
  for (int i = 0; i < 11; ++i) eleven[i] = i;
  CHECK(check_assumption1({100, {eleven}}, width(3)));
  eleven.push_back(11);
  CHECK_FALSE(check_assumption1({100, {eleven}}, width(3)));
}

TEST_CASE("undirected reduction finds the optimum when its assumptions hold") {
  // Sets of size <= n/g^2 and no cover with fewer than g sets.
  int checked = 0;
  for (std::uint64_t seed = 0; checked < 25 && seed < 400; ++seed) {
    Rng rng(seed);
    const int g = 2;
    const int n = static_cast<int>(rng.uniform_int(4, 8));
    const int m = static_cast<int>(rng.uniform_int(g, 6));
    const auto sc = random_instance(n, m, n / (g * g), rng.next(), true);
    if (!check_assumption1(sc, width(g))) continue;
    const auto opt = oracle::exhaustive_cover(sc);
    REQUIRE(opt);
    if (*opt < g) continue;
    PipelineParams params;
    params.prune = false;
    const auto scan = scan_undirected(sc, g, params);
    REQUIRE(scan.best);
    CHECK(*scan.best == *opt);
    CHECK(scan.calls == static_cast<long long>(oracle::partitions(n).size()));
    ++checked;
  }
  CHECK(checked == 25);
}

TEST_CASE("undirected reduction at g = 3 on singleton sets") {
  // Nine elements, nine or ten singleton-or-pair sets: C(m, 3) groups.
  const SetCoverInstance sc{9, {{0}, {1}, {2}, {3}, {4}, {5}, {6}, {7}, {8}}};
  PipelineParams params;
  const auto scan = scan_undirected(sc, 3, params);
  REQUIRE(scan.best);
  CHECK(*scan.best == 9);
}

TEST_CASE("every cover yields an embeddable tree") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto sc = random_instance(6, 5, 3, seed, true);
    const auto dp = dp_set_cover(sc);
    // Assign each element to the first witness set containing it.
    std::vector<int> load(sc.sets.size(), 0);
    for (int e = 0; e < sc.n; ++e) {
      for (int i : *dp.witness) {
        if (std::binary_search(sc.sets[i].begin(), sc.sets[i].end(), e)) {
          ++load[i];
          break;
        }
      }
    }
    std::vector<int> parts;
    for (int x : load)
      if (x > 0) parts.push_back(x);
    const Partition alpha = make_partition(parts);
    for (int g = 1; g <= std::min(3, sc.m()); ++g) {
      CHECK(solve_brute(build_host_undirected(sc, width(g)), build_tree_undirected(alpha, width(g), sc.n), exact()).yes());
      EmbedOptions anchored = exact();
      const HostGraph dh = build_host_directed(sc, width(g));
      anchored.anchor = vertex_of(dh, VertexClass::RootR);
      anchored.classConstrained = true;
      CHECK(solve_brute(dh, build_tree_directed(alpha, width(g)), anchored).yes());
    }
  }
}

TEST_CASE("adding a set keeps yes partitions yes") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto sc = random_instance(6, 4, 3, seed, true);
    auto bigger = sc;
    bigger.sets.push_back(random_instance(6, 1, 3, seed + 1000).sets[0]);
    for (const auto& alpha : enumerate_partitions(6)) {
      const bool before = solve_brute(build_host_undirected(sc, width(2)), build_tree_undirected(alpha, width(2), 6), exact()).yes();
      if (!before) continue;
      CHECK(solve_brute(build_host_undirected(bigger, width(2)), build_tree_undirected(alpha, width(2), 6), exact()).yes());
    }
  }
}

TEST_CASE("sets read off an anchored embedding form a partial cover") {
  const SetCoverInstance sc{5, {{0, 1}, {2}, {3, 4}, {1, 2}}};
  const HostGraph h = build_host_directed(sc, width(2));
  EmbedOptions o = exact();
  o.anchor = vertex_of(h, VertexClass::RootR);
  o.classConstrained = true;
  const auto tree = build_tree_directed(make_partition({2, 2, 1}), width(2));
  const auto r = solve_brute(h, tree, o);
  REQUIRE(r.yes());
  const auto sets = sets_from_embedding(h, tree, *r.witness);
  CHECK(sets.size() == 3);
  const auto sizes = oracle::union_sizes(sc);
  std::uint32_t pick = 0;
  for (int i : sets) pick |= 1u << i;
  CHECK(sizes[pick] >= 5);
}

TEST_CASE("literal directed reading undercounts on the shipped counterexample") {
  const auto pc = literal_mode_counterexample(7);
  CHECK(pc.base.n == 8);
  CHECK(pc.base.m() == 8);
  CHECK(pc.p == 8);
  CHECK(*oracle::exhaustive_partial(pc.base, pc.p) == 8);
}
