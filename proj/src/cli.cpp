#include "covertree/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "covertree/bench.hpp"
#include "covertree/cover.hpp"
#include "covertree/errors.hpp"
#include "covertree/instance.hpp"
#include "covertree/ktree.hpp"
#include "covertree/partitions.hpp"
#include "covertree/pipeline.hpp"
#include "covertree/reduction.hpp"

namespace covertree {

namespace {

/// Input problems that should end the run with the usage exit code.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

bool looks_partial(const std::string& text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && text[pos] == 'p';
}

Partition parse_alpha(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size() || v < 1) throw std::invalid_argument(item);
      parts.push_back(v);
    } catch (const std::exception&) {
      throw InputError("bad --alpha part '" + item + "'");
    }
  }
  if (parts.empty()) throw InputError("--alpha is empty");
  return make_partition(std::move(parts));
}

std::uint64_t default_seed() {
  const char* env = std::getenv("COVERTREE_SEED");
  if (env == nullptr || *env == '\0') return 0;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (env[used] != '\0') throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw InputError(std::string("COVERTREE_SEED is not an unsigned integer: ") + env);
  }
}

struct Globals {
  bool json = false;
  bool noTiming = false;
  int threads = 0;
};

struct SolveOpts {
  std::string method = "dp";
  std::string backend = "brute";
  double eps = 1.0;
  int g = 0;
  double delta = 1.0 / 1048576.0;
  std::uint64_t seed = 0;
  bool literal = false;
  bool noPrune = false;
  std::uint64_t groupCap = 1'000'000;
  std::string input;
};

void add_solve_options(CLI::App* cmd, SolveOpts& o) {
  cmd->add_option("--method", o.method, "dp or ktree")->check(CLI::IsMember({"dp", "ktree"}));
  cmd->add_option("--backend", o.backend, "kTree backend")->check(CLI::IsMember({"brute", "color", "algebraic"}));
  cmd->add_option("--eps", o.eps, "accuracy parameter in (0, 1]");
  cmd->add_option("--g", o.g, "override the derived group width");
  cmd->add_option("--delta", o.delta, "failure bound per kTree call");
  cmd->add_option("--seed", o.seed, "random seed");
  cmd->add_option("--group-cap", o.groupCap, "largest group layer to build");
  cmd->add_flag("--no-prune", o.noPrune, "query every partition");
  cmd->add_option("input", o.input, "instance file")->required();
}

PipelineParams pipeline_params(const SolveOpts& o, const Globals& gl) {
  PipelineParams p;
  p.eps = o.eps;
  if (o.g > 0) p.g = o.g;
  p.backend = *backend_from_string(o.backend);
  p.delta = o.delta;
  p.seed = o.seed;
  p.literal = o.literal;
  p.prune = !o.noPrune;
  p.groupCap = o.groupCap;
  p.threads = gl.threads;
  return p;
}

int emit_report(const SolveReport& r, const Globals& gl, std::ostream& out) {
  out << to_json(r, !gl.noTiming).dump() << '\n';
  return r.infeasible() ? kExitInfeasible : kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact set cover and partial cover through tree-pattern embedding", "covertree"};
  app.require_subcommand(1);
  Globals gl;
  app.add_flag("--json", gl.json, "machine-readable output everywhere");
  app.add_flag("--no-timing", gl.noTiming, "omit wall-clock fields");
  app.add_option("--threads", gl.threads, "OpenMP threads (0 = runtime default)");

  std::uint64_t seed0 = 0;
  try {
    seed0 = default_seed();
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  // gen
  auto* gen = app.add_subcommand("gen", "random instance");
  int genN = 8, genM = 6, genMax = 3, genP = 0;
  std::uint64_t genSeed = seed0;
  bool genFeasible = false;
  std::string genOut;
  gen->add_option("--n", genN, "ground set size")->check(CLI::PositiveNumber);
  gen->add_option("--m", genM, "number of sets")->check(CLI::PositiveNumber);
  gen->add_option("--max-set-size", genMax, "largest set")->check(CLI::PositiveNumber);
  gen->add_option("--seed", genSeed, "random seed");
  gen->add_option("--p", genP, "emit a partial cover instance with this p");
  gen->add_flag("--feasible", genFeasible, "add singletons for uncovered elements");
  gen->add_option("-o,--output", genOut, "output file (default stdout)");

  // partitions
  auto* parts = app.add_subcommand("partitions", "integer partitions");
  parts->require_subcommand(1);
  int partsA = 0;
  auto* partsCount = parts->add_subcommand("count", "p(a)");
  partsCount->add_option("a", partsA, "integer")->required()->check(CLI::NonNegativeNumber);
  auto* partsList = parts->add_subcommand("list", "all partitions of a");
  partsList->add_option("a", partsA, "integer")->required()->check(CLI::PositiveNumber);

  // reduce
  auto* reduce = app.add_subcommand("reduce", "emit the host graph and partition tree");
  std::string redMode = "undirected", redAlpha, redIn, redGraph, redTree;
  int redG = 1;
  std::uint64_t redCap = 1'000'000;
  reduce->add_option("--mode", redMode, "undirected or directed")->check(CLI::IsMember({"undirected", "directed"}));
  reduce->add_option("--g", redG, "group width")->required()->check(CLI::PositiveNumber);
  reduce->add_option("--alpha", redAlpha, "partition, comma separated")->required();
  reduce->add_option("--group-cap", redCap, "largest group layer to build");
  reduce->add_option("input", redIn, "instance file")->required();
  reduce->add_option("graph", redGraph, "host graph output")->required();
  reduce->add_option("tree", redTree, "tree output")->required();

  // ktree solve
  auto* ktree = app.add_subcommand("ktree", "tree-pattern embedding");
  ktree->require_subcommand(1);
  auto* kSolve = ktree->add_subcommand("solve", "decide whether the tree embeds");
  std::string kBackend = "brute", kHost, kTree;
  double kDelta = 1.0 / 1024.0;
  std::uint64_t kSeed = seed0;
  int kAnchor = 0, kBruteLimit = 14;
  bool kClasses = false;
  kSolve->add_option("--backend", kBackend, "brute, color or algebraic")
      ->check(CLI::IsMember({"brute", "color", "algebraic"}));
  kSolve->add_option("--delta", kDelta, "failure bound");
  kSolve->add_option("--seed", kSeed, "random seed");
  kSolve->add_option("--anchor", kAnchor, "host vertex (1-based) for the tree root")->check(CLI::PositiveNumber);
  kSolve->add_option("--brute-limit", kBruteLimit, "largest tree for the brute backend");
  kSolve->add_flag("--class-constrained", kClasses, "map only onto host vertices of the same class");
  kSolve->add_option("host", kHost, "host graph file")->required();
  kSolve->add_option("tree", kTree, "tree file")->required();

  // solve
  auto* solveCmd = app.add_subcommand("solve", "cover solvers");
  solveCmd->require_subcommand(1);
  SolveOpts scOpts, pcOpts;
  scOpts.seed = pcOpts.seed = seed0;
  auto* solveSc = solveCmd->add_subcommand("setcover", "minimum set cover");
  add_solve_options(solveSc, scOpts);
  auto* solvePc = solveCmd->add_subcommand("partial", "minimum p-partial cover");
  add_solve_options(solvePc, pcOpts);
  solvePc->add_flag("--literal", pcOpts.literal, "query the directed host without anchor or classes");

  // bench
  auto* bench = app.add_subcommand("bench", "compare methods on a random suite");
  BenchConfig bc;
  bc.seed = seed0;
  std::string benchCsv, benchJson;
  int benchG = 0;
  bench->add_option("--suite", bc.suite, "suite name");
  bench->add_option("--count", bc.count, "instances");
  bench->add_option("--n-min", bc.nMin);
  bench->add_option("--n-max", bc.nMax);
  bench->add_option("--m-min", bc.mMin);
  bench->add_option("--m-max", bc.mMax);
  bench->add_option("--max-set-size", bc.maxSetSize);
  bench->add_option("--p-rule", bc.pRule, "none, uniform or n")->check(CLI::IsMember({"none", "uniform", "n"}));
  bench->add_option("--seed", bc.seed);
  bench->add_option("--methods", bc.methods, "dp, ktree-brute, ktree-color, ktree-algebraic")->delimiter(',');
  bench->add_option("--reps", bc.repetitions);
  bench->add_option("--eps", bc.eps);
  bench->add_option("--g", benchG, "override the derived group width");
  bench->add_option("--group-cap", bc.groupCap);
  bench->add_option("--delta", bc.delta);
  bench->add_option("--csv", benchCsv, "CSV output path (default stdout)");
  bench->add_option("--summary", benchJson, "JSON summary path");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*gen) {
      if (genP < 0 || genP > genN) throw InputError("--p must lie in [0, n]");
      const SetCoverInstance sc = random_instance(genN, genM, std::min(genMax, genN), genSeed, genFeasible);
      const std::string text = genP > 0 ? serialize_partial_cover({sc, genP}) : serialize_set_cover(sc);
      if (genOut.empty()) {
        out << text;
      } else {
        write_file(genOut, text);
      }
      return kExitOk;
    }
    if (*parts) {
      if (*partsCount) {
        const BigInt count = count_partitions(partsA);
        if (gl.json) {
          out << nlohmann::json{{"a", partsA}, {"count", count.str()}}.dump() << '\n';
        } else {
          out << count << '\n';
        }
        return kExitOk;
      }
      PartitionStream stream(partsA);
      Partition alpha;
      nlohmann::json all = nlohmann::json::array();
      while (stream.next(alpha)) {
        if (gl.json) {
          all.push_back(alpha.parts);
          continue;
        }
        for (std::size_t i = 0; i < alpha.parts.size(); ++i) out << (i ? " " : "") << alpha.parts[i];
        out << '\n';
      }
      if (gl.json) out << all.dump() << '\n';
      return kExitOk;
    }
    if (*reduce) {
      const std::string text = read_file(redIn);
      const SetCoverInstance sc = looks_partial(text) ? parse_partial_cover(text).base : parse_set_cover(text);
      const Partition alpha = parse_alpha(redAlpha);
      ReductionParams rp;
      rp.g = redG;
      rp.groupCap = redCap;
      const bool directed = redMode == "directed";
      const HostGraph host = directed ? build_host_directed(sc, rp) : build_host_undirected(sc, rp);
      const PatternTree tree = directed ? build_tree_directed(alpha, rp) : build_tree_undirected(alpha, rp, sc.n);
      write_file(redGraph, serialize_graph(host));
      write_file(redTree, serialize_tree(tree));
      const nlohmann::json j = {{"mode", redMode},       {"g", redG},
                                {"rho", rp.rho(sc.n)},   {"host_vertices", host.vertex_count()},
                                {"host_edges", host.edge_count()}, {"tree_vertices", tree.vertex_count()}};
      if (gl.json) {
        out << j.dump() << '\n';
      } else {
        out << "host " << host.vertex_count() << " vertices, " << host.edge_count() << " edges; tree "
            << tree.vertex_count() << " vertices\n";
      }
      return kExitOk;
    }
    if (*kSolve) {
      const HostGraph host = parse_graph(read_file(kHost));
      const PatternTree tree = parse_tree(read_file(kTree));
      EmbedOptions opts;
      if (kAnchor > 0) opts.anchor = kAnchor - 1;
      opts.classConstrained = kClasses;
      opts.delta = kDelta;
      opts.seed = kSeed;
      opts.bruteLimit = kBruteLimit;
      opts.threads = gl.threads;
      const SolveReport r = solve(*backend_from_string(kBackend), host, tree, opts);
      if (gl.json) {
        out << to_json(r, !gl.noTiming).dump() << '\n';
      } else {
        out << (r.yes() ? "yes" : "no") << '\n';
      }
      return kExitOk;
    }
    if (*solveSc) {
      const SetCoverInstance sc = parse_set_cover(read_file(scOpts.input));
      return emit_report(scOpts.method == "dp" ? dp_set_cover(sc) : set_cover_via_ktree(sc, pipeline_params(scOpts, gl)),
                         gl, out);
    }
    if (*solvePc) {
      const PartialCoverInstance pc = parse_partial_cover(read_file(pcOpts.input));
      return emit_report(
          pcOpts.method == "dp" ? dp_partial_cover(pc) : partial_cover_via_ktree(pc, pipeline_params(pcOpts, gl)), gl,
          out);
    }
    if (*bench) {
      if (benchG > 0) bc.g = benchG;
      BenchResult result = bench_suite(bc);
      const std::string csv = bench_csv(result, !gl.noTiming);
      if (gl.noTiming) {
        for (auto& [name, m] : result.summary["methods"].items()) m.erase("median_ms");
      }
      if (benchCsv.empty()) {
        out << csv;
      } else {
        write_file(benchCsv, csv);
      }
      if (!benchJson.empty()) write_file(benchJson, result.summary.dump(2) + "\n");
      if (!benchCsv.empty() || gl.json) out << result.summary.dump() << '\n';
      if (result.disagreements > 0) {
        err << "bench: " << result.disagreements << " instance(s) with disagreeing answers\n";
        return kExitInfeasible;
      }
      return kExitOk;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    // Guards and refusals: the run could not be carried out as asked.
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace covertree
