#include "covertree/graph.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "covertree/errors.hpp"
#include "covertree/rng.hpp"

namespace covertree {

namespace {

constexpr std::array<std::string_view, 12> kClassNames = {
    "Unclassed", "Element", "Set",     "Group", "GuardR1", "GuardR2",
    "GuardR3",   "GuardR4", "RootR", "RootRg", "RootR1",  "RootR2",
};

}  // namespace

std::string_view to_string(VertexClass c) { return kClassNames[static_cast<std::size_t>(c)]; }

std::optional<VertexClass> vertex_class_from_string(std::string_view tag) {
  for (std::size_t i = 0; i < kClassNames.size(); ++i) {
    if (kClassNames[i] == tag) return static_cast<VertexClass>(i);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// HostGraph

namespace {

void build_csr(int n, const std::vector<std::pair<int, int>>& arcs, std::vector<int>& start,
               std::vector<int>& adj) {
  start.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& [a, b] : arcs) ++start[a + 1];
  for (int v = 0; v < n; ++v) start[v + 1] += start[v];
  adj.assign(arcs.size(), 0);
  std::vector<int> fill(start.begin(), start.end() - 1);
  for (const auto& [a, b] : arcs) adj[fill[a]++] = b;
  for (int v = 0; v < n; ++v) std::sort(adj.begin() + start[v], adj.begin() + start[v + 1]);
}

}  // namespace

HostGraph::HostGraph(int vertexCount, bool directed, const std::vector<std::pair<int, int>>& edges,
                     std::vector<VertexClass> classes, std::vector<std::vector<int>> payloads)
    : vertexCount_(vertexCount), directed_(directed), edgeCount_(edges.size()) {
  if (vertexCount < 0) throw std::invalid_argument("negative vertex count");
  classes_ = classes.empty() ? std::vector<VertexClass>(static_cast<std::size_t>(vertexCount), VertexClass::Unclassed)
                             : std::move(classes);
  payloads_ = payloads.empty() ? std::vector<std::vector<int>>(static_cast<std::size_t>(vertexCount))
                               : std::move(payloads);
  if (static_cast<int>(classes_.size()) != vertexCount || static_cast<int>(payloads_.size()) != vertexCount) {
    throw std::invalid_argument("class/payload arrays must have one entry per vertex");
  }

  std::vector<std::pair<int, int>> out;
  std::vector<std::pair<int, int>> in;
  out.reserve(edges.size() * (directed ? 1 : 2));
  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= vertexCount || b >= vertexCount) throw std::invalid_argument("edge endpoint out of range");
    if (a == b) throw std::invalid_argument("self-loop at vertex " + std::to_string(a + 1));
    out.emplace_back(a, b);
    if (directed) {
      in.emplace_back(b, a);
    } else {
      out.emplace_back(b, a);
    }
  }
  build_csr(vertexCount, out, outStart_, outAdj_);
  for (int v = 0; v < vertexCount; ++v) {
    if (std::adjacent_find(outAdj_.begin() + outStart_[v], outAdj_.begin() + outStart_[v + 1]) !=
        outAdj_.begin() + outStart_[v + 1]) {
      throw std::invalid_argument("parallel edge at vertex " + std::to_string(v + 1));
    }
  }
  if (directed) build_csr(vertexCount, in, inStart_, inAdj_);
}

bool HostGraph::has_arc(int a, int b) const {
  const auto nb = out(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

bool HostGraph::has_classes() const {
  return std::any_of(classes_.begin(), classes_.end(), [](VertexClass c) { return c != VertexClass::Unclassed; });
}

std::vector<std::pair<int, int>> HostGraph::edges() const {
  std::vector<std::pair<int, int>> result;
  result.reserve(edgeCount_);
  for (int a = 0; a < vertexCount_; ++a) {
    for (int b : out(a)) {
      if (directed_ || a < b) result.emplace_back(a, b);
    }
  }
  return result;
}

std::optional<int> HostGraph::find_class(VertexClass c) const {
  for (int v = 0; v < vertexCount_; ++v)
    if (classes_[v] == c) return v;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// PatternTree

PatternTree::PatternTree(std::vector<int> parent, int root, bool directed, std::vector<char> arcDown,
                         std::vector<VertexClass> classes)
    : parent_(std::move(parent)), root_(root), directed_(directed), arcDown_(std::move(arcDown)),
      classes_(std::move(classes)) {
  const int n = vertex_count();
  if (n == 0) throw std::invalid_argument("pattern tree needs at least one vertex");
  if (root < 0 || root >= n || parent_[root] != -1) throw std::invalid_argument("root must have parent -1");
  if (arcDown_.empty()) arcDown_.assign(static_cast<std::size_t>(n), 1);
  if (classes_.empty()) classes_.assign(static_cast<std::size_t>(n), VertexClass::Unclassed);
  if (static_cast<int>(arcDown_.size()) != n || static_cast<int>(classes_.size()) != n) {
    throw std::invalid_argument("orientation/class arrays must have one entry per vertex");
  }

  children_.assign(static_cast<std::size_t>(n), {});
  for (int v = 0; v < n; ++v) {
    if (v == root) continue;
    if (parent_[v] < 0 || parent_[v] >= n || parent_[v] == v) {
      throw std::invalid_argument("vertex " + std::to_string(v + 1) + " has no valid parent");
    }
    children_[parent_[v]].push_back(v);
  }

  preorder_.reserve(static_cast<std::size_t>(n));
  preorder_.push_back(root);
  for (std::size_t i = 0; i < preorder_.size(); ++i) {
    for (int c : children_[preorder_[i]]) preorder_.push_back(c);
  }
  if (static_cast<int>(preorder_.size()) != n) throw std::invalid_argument("parent structure is not a tree");

  subtreeSize_.assign(static_cast<std::size_t>(n), 1);
  for (auto it = preorder_.rbegin(); it != preorder_.rend(); ++it) {
    if (*it != root_) subtreeSize_[parent_[*it]] += subtreeSize_[*it];
  }
}

int PatternTree::count_class(VertexClass c) const {
  return static_cast<int>(std::count(classes_.begin(), classes_.end(), c));
}

std::vector<std::pair<int, int>> PatternTree::arcs() const {
  std::vector<std::pair<int, int>> result;
  result.reserve(parent_.size());
  for (int v = 0; v < vertex_count(); ++v) {
    if (v == root_) continue;
    if (arc_down(v)) {
      result.emplace_back(parent_[v], v);
    } else {
      result.emplace_back(v, parent_[v]);
    }
  }
  return result;
}

HostGraph PatternTree::as_graph() const { return HostGraph(vertex_count(), directed_, arcs(), classes_); }

// ---------------------------------------------------------------------------
// Text format

namespace {

struct RawGraph {
  int vertexCount = 0;
  bool directed = false;
  std::vector<std::pair<int, int>> edges;
  std::vector<VertexClass> classes;
  std::optional<int> root;
};

bool parse_int(std::string_view tok, long long& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

std::vector<std::string> split(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

RawGraph read_raw(std::istream& in) {
  RawGraph raw;
  std::string line;
  int lineNo = 0;
  bool haveHeader = false;
  long long expectedEdges = 0;

  auto vertex_id = [&](const std::string& tok) {
    long long v = 0;
    if (!parse_int(tok, v)) throw ParseError(lineNo, "expected a vertex id, got '" + tok + "'");
    if (v < 1 || v > raw.vertexCount) throw ParseError(lineNo, "vertex " + tok + " out of range");
    return static_cast<int>(v - 1);
  };

  while (std::getline(in, line)) {
    ++lineNo;
    auto tokens = split(line);
    if (tokens.empty()) continue;
    if (tokens[0] == "#" || tokens[0][0] == '#') {
      if (!haveHeader) throw ParseError(lineNo, "annotation before header");
      if (tokens[0] != "#") tokens.insert(tokens.begin() + 1, tokens[0].substr(1));
      if (tokens.size() == 4 && tokens[1] == "class") {
        auto c = vertex_class_from_string(tokens[3]);
        if (!c) throw ParseError(lineNo, "unknown vertex class '" + tokens[3] + "'");
        raw.classes[vertex_id(tokens[2])] = *c;
      } else if (tokens.size() == 3 && tokens[1] == "root") {
        raw.root = vertex_id(tokens[2]);
      }
      continue;
    }
    if (!haveHeader) {
      long long v = 0;
      long long e = 0;
      if (tokens.size() != 3 || !parse_int(tokens[0], v) || !parse_int(tokens[1], e) ||
          (tokens[2] != "u" && tokens[2] != "d")) {
        throw ParseError(lineNo, "header must be \"V E u|d\"");
      }
      if (v < 0 || e < 0 || v > (1LL << 30)) throw ParseError(lineNo, "bad vertex or edge count");
      raw.vertexCount = static_cast<int>(v);
      raw.directed = tokens[2] == "d";
      raw.classes.assign(static_cast<std::size_t>(v), VertexClass::Unclassed);
      expectedEdges = e;
      haveHeader = true;
      continue;
    }
    if (tokens.size() != 2) throw ParseError(lineNo, "edge line must be \"a b\"");
    if (static_cast<long long>(raw.edges.size()) == expectedEdges) throw ParseError(lineNo, "more edges than declared");
    const int a = vertex_id(tokens[0]);
    const int b = vertex_id(tokens[1]);
    if (a == b) throw ParseError(lineNo, "self-loop");
    raw.edges.emplace_back(a, b);
  }
  if (!haveHeader) throw ParseError(lineNo, "missing header \"V E u|d\"");
  if (static_cast<long long>(raw.edges.size()) != expectedEdges) {
    throw ParseError(lineNo, "declared " + std::to_string(expectedEdges) + " edges, found " +
                                 std::to_string(raw.edges.size()));
  }
  return raw;
}

void write_classes(std::ostringstream& out, const std::vector<VertexClass>& classes) {
  const bool any = std::any_of(classes.begin(), classes.end(), [](VertexClass c) { return c != VertexClass::Unclassed; });
  if (!any) return;
  for (std::size_t v = 0; v < classes.size(); ++v) {
    out << "# class " << v + 1 << ' ' << to_string(classes[v]) << '\n';
  }
}

}  // namespace

std::string serialize_graph(const HostGraph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << ' ' << (g.directed() ? 'd' : 'u') << '\n';
  for (const auto& [a, b] : g.edges()) out << a + 1 << ' ' << b + 1 << '\n';
  write_classes(out, g.classes());
  return out.str();
}

std::string serialize_tree(const PatternTree& t) {
  auto arcs = t.arcs();
  if (!t.directed()) {
    for (auto& [a, b] : arcs)
      if (a > b) std::swap(a, b);
  }
  std::sort(arcs.begin(), arcs.end());
  std::ostringstream out;
  out << t.vertex_count() << ' ' << arcs.size() << ' ' << (t.directed() ? 'd' : 'u') << '\n';
  for (const auto& [a, b] : arcs) out << a + 1 << ' ' << b + 1 << '\n';
  out << "# root " << t.root() + 1 << '\n';
  write_classes(out, t.classes());
  return out.str();
}

HostGraph parse_graph(std::istream& in) {
  RawGraph raw = read_raw(in);
  try {
    return HostGraph(raw.vertexCount, raw.directed, raw.edges, std::move(raw.classes));
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
}

HostGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

PatternTree parse_tree(std::istream& in) {
  RawGraph raw = read_raw(in);
  const int n = raw.vertexCount;
  if (n < 1) throw ParseError(0, "tree needs at least one vertex");
  if (static_cast<int>(raw.edges.size()) != n - 1) throw ParseError(0, "a tree on V vertices has V-1 edges");

  int root = 0;
  if (raw.root) {
    root = *raw.root;
  } else if (raw.directed) {
    std::vector<int> indeg(static_cast<std::size_t>(n), 0);
    for (const auto& [a, b] : raw.edges) ++indeg[b];
    if (std::count(indeg.begin(), indeg.end(), 0) == 1) {
      root = static_cast<int>(std::find(indeg.begin(), indeg.end(), 0) - indeg.begin());
    }
  }

  // Orient over the underlying undirected tree.
  std::vector<std::vector<std::pair<int, bool>>> nbr(static_cast<std::size_t>(n));
  for (const auto& [a, b] : raw.edges) {
    nbr[a].emplace_back(b, true);   // a->b seen from a: points away
    nbr[b].emplace_back(a, false);  // seen from b: points toward b
  }
  std::vector<int> parent(static_cast<std::size_t>(n), -2);
  std::vector<char> down(static_cast<std::size_t>(n), 1);
  parent[root] = -1;
  std::vector<int> queue{root};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const int v = queue[i];
    for (const auto& [w, away] : nbr[v]) {
      if (w == parent[v]) continue;
      if (parent[w] != -2) throw ParseError(0, "edges contain a cycle");
      parent[w] = v;
      down[w] = away ? 1 : 0;
      queue.push_back(w);
    }
  }
  if (static_cast<int>(queue.size()) != n) throw ParseError(0, "tree edges are not connected");
  return PatternTree(std::move(parent), root, raw.directed, std::move(down), std::move(raw.classes));
}

PatternTree parse_tree(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_tree(in);
}

HostGraph random_graph(int vertices, int edges, bool directed, std::uint64_t seed) {
  if (vertices < 1 || edges < 0) throw std::invalid_argument("random_graph: bad size");
  const long long pairs = static_cast<long long>(vertices) * (vertices - 1) / (directed ? 1 : 2);
  if (edges > pairs) throw std::invalid_argument("random_graph: too many edges");
  Rng rng(seed);
  std::vector<std::pair<int, int>> all;
  all.reserve(static_cast<std::size_t>(pairs));
  for (int a = 0; a < vertices; ++a)
    for (int b = directed ? 0 : a + 1; b < vertices; ++b)
      if (a != b) all.emplace_back(a, b);
  for (int i = 0; i < edges; ++i) {
    const auto j = i + static_cast<std::size_t>(rng.below(all.size() - i));
    std::swap(all[i], all[j]);
  }
  all.resize(static_cast<std::size_t>(edges));
  return HostGraph(vertices, directed, std::move(all));
}

PatternTree random_tree(int k, bool directed, std::uint64_t seed, bool arborescence) {
  if (k < 1) throw std::invalid_argument("random_tree: k must be >= 1");
  Rng rng(seed);
  std::vector<int> parent(static_cast<std::size_t>(k), -1);
  for (int v = 1; v < k; ++v) parent[v] = static_cast<int>(rng.below(static_cast<std::uint64_t>(v)));
  std::vector<char> down;
  if (directed) {
    down.assign(static_cast<std::size_t>(k), 1);
    if (!arborescence)
      for (int v = 1; v < k; ++v) down[v] = static_cast<char>(rng.below(2));
  }
  return PatternTree(std::move(parent), 0, directed, std::move(down));
}

}  // namespace covertree
