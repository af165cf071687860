#include <doctest.h>

#include "covertree/cover.hpp"
#include "covertree/errors.hpp"
#include "covertree/pipeline.hpp"
#include "covertree/reduction.hpp"
#include "covertree/rng.hpp"
#include "oracles.hpp"

using namespace covertree;

namespace {

bool covers(const SetCoverInstance& sc, const std::vector<int>& sets, int p) {
  std::uint32_t pick = 0;
  for (int i : sets) pick |= 1u << i;
  return oracle::union_sizes(sc)[pick] >= p;
}

}  // namespace

TEST_CASE("dp_set_cover") {
  const SetCoverInstance tiny{3, {{0, 1}, {1, 2}, {2}}};
  const auto r = dp_set_cover(tiny);
  CHECK(r.optimum() == 2);
  CHECK(covers(tiny, *r.witness, 3));
  CHECK(dp_set_cover({4, {{0, 1, 2, 3}, {0}}}).optimum() == 1);
  CHECK(dp_set_cover({5, {{0}, {1}, {2}, {3}, {4}}}).optimum() == 5);
  CHECK(dp_set_cover({3, {{0}, {1}}}).infeasible());
  CHECK_THROWS_AS(dp_set_cover({26, {{0}}}), GuardExceeded);

  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Rng rng(seed);
    const int n = static_cast<int>(rng.uniform_int(1, 10));
    const int m = static_cast<int>(rng.uniform_int(1, 6));
    const auto sc = random_instance(n, m, static_cast<int>(rng.uniform_int(1, n)), rng.next());
    const auto want = oracle::exhaustive_cover(sc);
    const auto got = dp_set_cover(sc);
    if (!want) {
      CHECK(got.infeasible());
      continue;
    }
    CHECK(got.optimum() == *want);
    CHECK(covers(sc, *got.witness, n));
    CHECK(static_cast<long long>(got.witness->size()) == *want);
  }
}

TEST_CASE("dp_partial_cover") {
  const SetCoverInstance sc{4, {{0, 1}, {2}, {3}}};
  CHECK(dp_partial_cover({sc, 2}).optimum() == 1);
  CHECK(dp_partial_cover({sc, 4}).optimum() == 3);
  CHECK_THROWS_AS(dp_partial_cover({sc, 5}), std::invalid_argument);
  CHECK_THROWS_AS(dp_partial_cover({sc, 0}), std::invalid_argument);
  CHECK(dp_partial_cover({{4, {{0}}}, 2}).infeasible());

  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Rng rng(seed);
    const int n = static_cast<int>(rng.uniform_int(1, 10));
    const auto base = random_instance(n, static_cast<int>(rng.uniform_int(1, 6)), std::min(n, 4), rng.next());
    const int p = static_cast<int>(rng.uniform_int(1, n));
    const auto got = dp_partial_cover({base, p});
    const auto want = oracle::exhaustive_partial(base, p);
    if (!want) {
      CHECK(got.infeasible());
      continue;
    }
    CHECK(got.optimum() == *want);
    CHECK(covers(base, *got.witness, p));
    if (p == n) CHECK(got.optimum() == dp_set_cover(base).optimum());
  }
}

TEST_CASE("large_set_handler") {
  CHECK(large_set_handler({5, {{0, 1, 2, 3, 4}, {1}}}, 3)->optimum() == 1);
  CHECK_FALSE(large_set_handler({9, {{0}, {1, 2}}}, 3));
  // Threshold n/g^2 = 4 at g = 1 excludes {1,2,3}; at g = 2 it is 1.
  const SetCoverInstance sc{4, {{0, 1, 2}, {3}}};
  CHECK_FALSE(large_set_handler(sc, 1));
  CHECK(large_set_handler(sc, 2)->optimum() == 2);
  // Whenever some optimum uses a large set the handler is exact.
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto inst = random_instance(8, 5, 5, seed, true);
    const int g = 1 + static_cast<int>(seed % 2);
    const auto r = large_set_handler(inst, g);
    const auto opt = *oracle::exhaustive_cover(inst);
    if (r) {
      CHECK(*r->optimum() >= opt);
      CHECK(covers(inst, *r->witness, inst.n));
    }
  }
}

TEST_CASE("small_solution_handler") {
  const SetCoverInstance two{3, {{0, 1}, {1, 2}, {2}}};
  CHECK(small_solution_handler(two, 3)->optimum() == 2);
  CHECK_FALSE(small_solution_handler({5, {{0}, {1}, {2}, {3}, {4}}}, 3));
  CHECK_FALSE(small_solution_handler(two, 1));
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto inst = random_instance(7, 6, 3, seed, true);
    const auto opt = *oracle::exhaustive_cover(inst);
    const int g = 1 + static_cast<int>(seed % 5);
    const auto r = small_solution_handler(inst, g);
    CHECK(static_cast<bool>(r) == (opt <= g - 1));
    if (r) CHECK(r->optimum() == opt);
  }
}

TEST_CASE("parameter schedule") {
  CHECK(theorem1_g(1.0) == 9);
  CHECK(theorem1_g(0.5) == 18);
  CHECK(theorem2_g(1.0) == 7);
  CHECK(theorem2_eps_prime(1.0) == doctest::Approx(0.5849625007));
  CHECK(theorem1_delta(1.0) == doctest::Approx(0.25));
  CHECK(theorem1_delta(0.5) == doctest::Approx(0.125));
  CHECK(theorem1_delta(0.04) == doctest::Approx(0.01));
  CHECK_THROWS_AS(theorem1_delta(0.0), std::invalid_argument);
  CHECK_THROWS_AS(theorem1_g(1.5), std::invalid_argument);
}

TEST_CASE("set_cover_via_ktree examples") {
  PipelineParams params;
  CHECK(set_cover_via_ktree({3, {{0, 1}, {1, 2}, {2}}}, params).optimum() == 2);
  for (double eps : {1.0, 0.5, 0.1}) {
    params.eps = eps;
    CHECK(set_cover_via_ktree({6, {{0}, {0, 1, 2, 3, 4, 5}, {3}}}, params).optimum() == 1);
  }
  CHECK(set_cover_via_ktree({3, {{0}}}, {}).infeasible());
}

TEST_CASE("set_cover_via_ktree takes the reduction path at small g") {
  // g = 2: every instance with optimum >= 2 and a set above n/4 exercises
  // both handlers and the reduction on the remaining sets.
  int reduced = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto sc = random_instance(8, 5, 3, seed, true);
    PipelineParams params;
    params.g = 2;
    params.seed = seed;
    const auto r = set_cover_via_ktree(sc, params);
    CHECK(r.optimum() == oracle::exhaustive_cover(sc));
    if (r.witness) CHECK(covers(sc, *r.witness, sc.n));
    if (r.params.value("source", "") == "reduction") ++reduced;
  }
  CHECK(reduced > 0);
}

TEST_CASE("set_cover_via_ktree propagates refusals") {
  PipelineParams params;
  params.g = 2;
  params.groupCap = 1;
  const SetCoverInstance sc{8, {{0}, {1}, {2}, {3}, {4}, {5}, {6}, {7}}};
  CHECK_THROWS_AS(set_cover_via_ktree(sc, params), ReductionRefused);
}

TEST_CASE("partial_cover_via_ktree") {
  const SetCoverInstance sc{4, {{0, 1}, {2}, {3}}};
  PipelineParams params;
  CHECK(partial_cover_via_ktree({sc, 2}, params).optimum() == 1);
  CHECK(partial_cover_via_ktree({sc, 1}, params).optimum() == 1);
  CHECK(partial_cover_via_ktree({{4, {{0}, {1}}}, 3}, params).infeasible());
  CHECK_THROWS_AS(partial_cover_via_ktree({sc, 5}, params), std::invalid_argument);

  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    Rng rng(seed);
    const int n = static_cast<int>(rng.uniform_int(2, 8));
    const auto base = random_instance(n, static_cast<int>(rng.uniform_int(1, 6)), std::min(n, 3), rng.next());
    const int p = static_cast<int>(rng.uniform_int(1, n));
    PipelineParams pp;
    pp.g = static_cast<int>(rng.uniform_int(1, 4));
    pp.seed = seed;
    pp.backend = p <= 4 && seed % 2 == 0 ? Backend::Algebraic : Backend::Brute;
    const auto r = partial_cover_via_ktree({base, p}, pp);
    const auto want = oracle::exhaustive_partial(base, p);
    if (!want) {
      CHECK(r.infeasible());
      continue;
    }
    CHECK(r.optimum() == *want);
    if (r.witness) CHECK(covers(base, *r.witness, p));
  }
}

TEST_CASE("partial cover optimum is monotone in p and in the sets") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto base = random_instance(7, 4, 3, seed);
    auto more = base;
    more.sets.push_back(random_instance(7, 1, 3, seed + 500).sets[0]);
    long long prev = 0;
    for (int p = 1; p <= 7; ++p) {
      const auto a = partial_cover_via_ktree({base, p}, {});
      const auto b = partial_cover_via_ktree({more, p}, {});
      if (a.infeasible()) break;
      CHECK(*a.optimum() >= prev);
      prev = *a.optimum();
      REQUIRE(b.optimum());
      CHECK(*b.optimum() <= *a.optimum());
      CHECK(*a.optimum() <= base.m());
      CHECK(*a.optimum() * base.max_set_size() >= p);
    }
  }
}

TEST_CASE("kTree call counts equal the partition counts without pruning") {
  PipelineParams params;
  params.prune = false;
  const auto pc = literal_mode_counterexample(3);
  const auto r = partial_cover_via_ktree(pc, params);
  CHECK(r.params["ktree_calls"] == count_partitions(pc.p).convert_to<long long>());
  params.prune = true;
  const auto pruned = partial_cover_via_ktree(pc, params);
  CHECK(pruned.params["ktree_calls"].get<long long>() <= count_partitions(pc.p).convert_to<long long>());
  CHECK(pruned.optimum() == r.optimum());
}

TEST_CASE("literal mode undercounts, anchored mode does not") {
  const auto pc = literal_mode_counterexample(7);
  PipelineParams params;
  const auto anchored = partial_cover_via_ktree(pc, params);
  params.literal = true;
  const auto literal = partial_cover_via_ktree(pc, params);
  CHECK(anchored.optimum() == 8);
  CHECK(*literal.optimum() < 8);
  CHECK(params.literal);
}
