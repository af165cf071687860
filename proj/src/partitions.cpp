#include "covertree/partitions.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace covertree {

PartitionStream::PartitionStream(int a) : target_(a) {
  if (a < 1) throw std::invalid_argument("enumerate_partitions: a must be >= 1");
}

bool PartitionStream::next(Partition& out) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    value_ = {target_};
    count_ = {1};
  } else {
    // Strip the trailing run of ones into the pool.
    int pool = 0;
    if (value_.back() == 1) {
      pool = count_.back();
      value_.pop_back();
      count_.pop_back();
    }
    if (value_.empty()) {
      done_ = true;
      return false;
    }
    // Break one copy of the smallest part > 1 and refill greedily with parts one smaller.
    const int v = value_.back();
    pool += v;
    if (--count_.back() == 0) {
      value_.pop_back();
      count_.pop_back();
    }
    const int u = v - 1;
    value_.push_back(u);
    count_.push_back(pool / u);
    if (pool % u != 0) {
      value_.push_back(pool % u);
      count_.push_back(1);
    }
  }

  out.target = target_;
  out.parts.clear();
  for (std::size_t i = 0; i < value_.size(); ++i) out.parts.insert(out.parts.end(), count_[i], value_[i]);
  return true;
}

std::vector<Partition> enumerate_partitions(int a) {
  std::vector<Partition> all;
  PartitionStream stream(a);
  Partition p;
  while (stream.next(p)) all.push_back(p);
  return all;
}

BigInt count_partitions(int a) {
  if (a < 0) return 0;
  std::vector<BigInt> p(static_cast<std::size_t>(a) + 1);
  p[0] = 1;
  for (int n = 1; n <= a; ++n) {
    BigInt sum = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      if (g1 > n) break;
      const int g2 = k * (3 * k + 1) / 2;
      BigInt term = p[n - g1];
      if (g2 <= n) term += p[n - g2];
      if (k % 2 == 1) {
        sum += term;
      } else {
        sum -= term;
      }
    }
    p[n] = sum;
  }
  return p[a];
}

double hardy_estimate(int a) {
  if (a < 1) throw std::invalid_argument("hardy_estimate: a must be >= 1");
  const double exponent = std::numbers::pi * std::sqrt(2.0 * a / 3.0);
  const double logValue = exponent - std::log(4.0 * a * std::sqrt(3.0));
  if (logValue >= std::log(std::numeric_limits<double>::max())) {
    throw std::overflow_error("hardy_estimate: value exceeds double range for a = " + std::to_string(a));
  }
  return std::exp(logValue);
}

ShrunkPartition shrink(const Partition& alpha, int g) {
  if (g < 1) throw std::invalid_argument("shrink: g must be >= 1");
  ShrunkPartition s;
  s.g = g;
  const int l = alpha.size();
  const int groups = l / g;
  s.grouped.reserve(static_cast<std::size_t>(groups));
  for (int j = 0; j < groups; ++j) {
    int sum = 0;
    for (int i = j * g; i < (j + 1) * g; ++i) sum += alpha.parts[i];
    s.grouped.push_back(sum);
  }
  s.tail.assign(alpha.parts.begin() + groups * g, alpha.parts.end());
  return s;
}

Partition make_partition(std::vector<int> parts) {
  for (int x : parts)
    if (x < 1) throw std::invalid_argument("partition parts must be positive");
  std::sort(parts.begin(), parts.end(), std::greater<>());
  Partition p;
  p.target = 0;
  for (int x : parts) p.target += x;
  p.parts = std::move(parts);
  return p;
}

}  // namespace covertree
