#include <doctest.h>

#include <cmath>
#include <set>

#include "covertree/partitions.hpp"
#include "covertree/rng.hpp"
#include "oracles.hpp"

using namespace covertree;

TEST_CASE("small partition streams") {
  const auto one = enumerate_partitions(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].parts == std::vector<int>{1});

  const auto four = enumerate_partitions(4);
  std::vector<std::vector<int>> got;
  for (const auto& p : four) got.push_back(p.parts);
  CHECK(got == std::vector<std::vector<int>>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
  CHECK(enumerate_partitions(10).size() == 42);
  CHECK_THROWS_AS(PartitionStream(0), std::invalid_argument);
}

TEST_CASE("stream matches the recursive generator, in the same order") {
  for (int a = 1; a <= 22; ++a) {
    const auto expected = oracle::partitions(a);
    const auto got = enumerate_partitions(a);
    REQUIRE(got.size() == expected.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
      CHECK(got[i].parts == expected[i]);
      CHECK(got[i].target == a);
    }
  }
}

TEST_CASE("count_partitions") {
  CHECK(count_partitions(0) == 1);
  CHECK(count_partitions(4) == 5);
  CHECK(count_partitions(100) == BigInt("190569292"));
  CHECK(count_partitions(200) == BigInt("3972999029388"));
  for (int a = 1; a <= 30; ++a) CHECK(count_partitions(a) == oracle::partitions(a).size());
}

TEST_CASE("hardy_estimate") {
  const double pi = std::acos(-1.0);
  CHECK(hardy_estimate(1) == doctest::Approx(std::exp(pi * std::sqrt(2.0 / 3.0)) / (4.0 * std::sqrt(3.0))));
  for (int a : {50, 100}) {
    const double ratio = hardy_estimate(a) / count_partitions(a).convert_to<double>();
    CHECK(ratio >= 1.0);
    CHECK(ratio <= 1.10);
  }
  for (int a = 1; a < 200; ++a) CHECK(hardy_estimate(a + 1) > hardy_estimate(a));
  CHECK_THROWS_AS(hardy_estimate(100000), std::overflow_error);
  CHECK_THROWS_AS(hardy_estimate(0), std::invalid_argument);
}

TEST_CASE("shrink") {
  auto s = shrink(make_partition({3, 2, 2, 1, 1, 1}), 2);
  CHECK(s.grouped == std::vector<int>{5, 3, 2});
  CHECK(s.tail.empty());

  s = shrink(make_partition({4, 1}), 3);
  CHECK(s.grouped.empty());
  CHECK(s.tail == std::vector<int>{4, 1});

  s = shrink(make_partition({2, 2, 1}), 2);
  CHECK(s.grouped == std::vector<int>{4});
  CHECK(s.tail == std::vector<int>{1});

  Rng rng(5);
  for (int i = 0; i < 2000; ++i) {
    const int a = static_cast<int>(rng.uniform_int(1, 40));
    std::vector<int> parts;
    for (int rest = a; rest > 0;) {
      const int part = static_cast<int>(rng.uniform_int(1, rest));
      parts.push_back(part);
      rest -= part;
    }
    const auto alpha = make_partition(parts);
    const int g = static_cast<int>(rng.uniform_int(1, 12));
    const auto sh = shrink(alpha, g);
    int sum = 0;
    for (int x : sh.grouped) {
      sum += x;
      CHECK(x >= g);
    }
    for (int x : sh.tail) sum += x;
    CHECK(sum == a);
    CHECK(static_cast<int>(sh.tail.size()) < g);
    CHECK(sh.grouped.size() == alpha.parts.size() / static_cast<std::size_t>(g));
  }
}
