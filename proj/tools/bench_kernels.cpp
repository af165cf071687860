// Serial reference kernels against their parallel counterparts.
//
//   ga_mul     naive O(4^k) convolution vs. bit-sliced Walsh-Hadamard path
//   algebraic  literal group-algebra DP vs. the scalar sieve (one trial)
//   threads    the sieve on one thread vs. all threads
//
// Prints one CSV row per (kernel, k) with median timings and an agreement flag.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <vector>

#include <CLI11.hpp>
#include <omp.h>

#include "covertree/group_algebra.hpp"
#include "covertree/ktree.hpp"
#include "covertree/rng.hpp"

using namespace covertree;

namespace {

template <class Fn>
double median_ms(int reps, Fn&& fn) {
  std::vector<double> t;
  for (int i = 0; i < reps; ++i) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    t.push_back(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
  }
  std::sort(t.begin(), t.end());
  return t[t.size() / 2];
}

GroupAlgebraElement random_element(int k, Rng& rng) {
  GroupAlgebraElement e(k);
  for (std::size_t z = 0; z < e.size(); ++z) e[z] = rng.next();
  return e;
}

void row(const char* kernel, int k, double serial, double parallel, bool agree) {
  std::cout << kernel << ',' << k << ',' << serial << ',' << parallel << ','
            << (parallel > 0 ? serial / parallel : 0.0) << ',' << (agree ? "yes" : "no") << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kernel benchmark: serial reference vs. parallel"};
  int reps = 3, gaMax = 10, refMax = 10, sieveMin = 10, sieveMax = 16, hostSize = 40;
  std::uint64_t seed = 1;
  app.add_option("--reps", reps)->check(CLI::PositiveNumber);
  app.add_option("--ga-kmax", gaMax)->check(CLI::Range(1, 12));
  app.add_option("--ref-kmax", refMax)->check(CLI::Range(1, 12));
  app.add_option("--sieve-kmin", sieveMin)->check(CLI::Range(1, kAlgebraicMaxK));
  app.add_option("--sieve-kmax", sieveMax)->check(CLI::Range(1, kAlgebraicMaxK));
  app.add_option("--host", hostSize)->check(CLI::Range(2, 1000));
  app.add_option("--seed", seed);
  CLI11_PARSE(app, argc, argv);

  std::cout << "kernel,k,serial_ms,parallel_ms,speedup,agree\n";
  Rng rng(seed);

  for (int k = 1; k <= gaMax; ++k) {
    const auto a = random_element(k, rng);
    const auto b = random_element(k, rng);
    GroupAlgebraElement slow(k), fast(k);
    const double s = median_ms(reps, [&] { slow = ga_mul_naive(a, b); });
    const double f = median_ms(reps, [&] { fast = ga_mul_fast(a, b); });
    row("ga_mul", k, s, f, slow == fast);
  }

  const HostGraph small = random_graph(20, 60, false, rng.next());
  for (int k = 2; k <= refMax; ++k) {
    const PatternTree tree = random_tree(k, false, rng.next());
    EmbedOptions opts;
    opts.seed = rng.next();
    GroupAlgebraElement full(k);
    gf64 c = 0;
    const double s = median_ms(reps, [&] { full = algebraic_trial_element(small, tree, opts, 0); });
    const double f = median_ms(reps, [&] { c = algebraic_trial_scalar(small, tree, opts, 0); });
    GroupAlgebraElement expect = GroupAlgebraElement::all_ones(k);
    expect.scale(c);
    row("algebraic", k, s, f, full == expect);
  }

  const HostGraph host = random_graph(hostSize, 3 * hostSize, false, rng.next());
  for (int k = sieveMin; k <= sieveMax; ++k) {
    const PatternTree tree = random_tree(k, false, rng.next());
    EmbedOptions one;
    one.seed = rng.next();
    one.threads = 1;
    EmbedOptions all = one;
    all.threads = omp_get_max_threads();
    gf64 c1 = 0, c2 = 0;
    const double s = median_ms(reps, [&] { c1 = algebraic_trial_scalar(host, tree, one, 0); });
    const double f = median_ms(reps, [&] { c2 = algebraic_trial_scalar(host, tree, all, 0); });
    row("threads", k, s, f, c1 == c2);
  }
  return 0;
}
