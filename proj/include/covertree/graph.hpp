#pragma once

// Host graphs and pattern trees shared by the reduction builders and the
// embedding engine, plus the "V E u|d" text format.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace covertree {

enum class VertexClass : std::uint8_t {
  Unclassed,
  Element,
  Set,
  Group,
  GuardR1,
  GuardR2,
  GuardR3,
  GuardR4,
  RootR,
  RootRg,
  RootR1,
  RootR2,
};

std::string_view to_string(VertexClass c);
std::optional<VertexClass> vertex_class_from_string(std::string_view tag);

/// Immutable simple graph in CSR form. For directed graphs out() and in()
/// differ; for undirected graphs both return the same neighbor list.
class HostGraph {
 public:
  HostGraph() = default;

  /// Builds from an edge list. Throws std::invalid_argument on self-loops,
  /// parallel edges or out-of-range endpoints.
  HostGraph(int vertexCount, bool directed, const std::vector<std::pair<int, int>>& edges,
            std::vector<VertexClass> classes = {}, std::vector<std::vector<int>> payloads = {});

  int vertex_count() const { return vertexCount_; }
  bool directed() const { return directed_; }
  /// Undirected edges counted once; directed arcs counted individually.
  std::size_t edge_count() const { return edgeCount_; }

  std::span<const int> out(int v) const {
    return {outAdj_.data() + outStart_[v], outAdj_.data() + outStart_[v + 1]};
  }
  std::span<const int> in(int v) const {
    if (!directed_) return out(v);
    return {inAdj_.data() + inStart_[v], inAdj_.data() + inStart_[v + 1]};
  }
  int out_degree(int v) const { return outStart_[v + 1] - outStart_[v]; }
  int in_degree(int v) const { return directed_ ? inStart_[v + 1] - inStart_[v] : out_degree(v); }
  /// Undirected degree, or out+in for directed graphs.
  int degree(int v) const { return directed_ ? out_degree(v) + in_degree(v) : out_degree(v); }

  /// Arc a->b (or edge {a,b} when undirected).
  bool has_arc(int a, int b) const;

  VertexClass vertex_class(int v) const { return classes_[v]; }
  const std::vector<VertexClass>& classes() const { return classes_; }
  const std::vector<int>& payload(int v) const { return payloads_[v]; }
  bool has_classes() const;

  /// Edge list in canonical order (a<b for undirected).
  std::vector<std::pair<int, int>> edges() const;

  /// First vertex of the given class, if any.
  std::optional<int> find_class(VertexClass c) const;

 private:
  int vertexCount_ = 0;
  bool directed_ = false;
  std::size_t edgeCount_ = 0;
  std::vector<int> outStart_{0};
  std::vector<int> outAdj_;
  std::vector<int> inStart_{0};
  std::vector<int> inAdj_;
  std::vector<VertexClass> classes_;
  std::vector<std::vector<int>> payloads_;
};

/// Rooted tree pattern. For a directed pattern, arc_down(v) tells whether the
/// arc between v and its parent points parent->v.
class PatternTree {
 public:
  PatternTree() = default;

  /// parent[root] must be -1. Throws std::invalid_argument unless the parent
  /// structure is a single tree rooted at `root`.
  PatternTree(std::vector<int> parent, int root, bool directed, std::vector<char> arcDown = {},
              std::vector<VertexClass> classes = {});

  int vertex_count() const { return static_cast<int>(parent_.size()); }
  int root() const { return root_; }
  bool directed() const { return directed_; }
  int parent(int v) const { return parent_[v]; }
  bool arc_down(int v) const { return !directed_ || arcDown_[v] != 0; }
  VertexClass vertex_class(int v) const { return classes_[v]; }
  const std::vector<VertexClass>& classes() const { return classes_; }
  const std::vector<int>& children(int v) const { return children_[v]; }
  int degree(int v) const { return static_cast<int>(children_[v].size()) + (v == root_ ? 0 : 1); }

  /// Parents before children.
  const std::vector<int>& preorder() const { return preorder_; }
  /// Subtree size rooted at v.
  int subtree_size(int v) const { return subtreeSize_[v]; }
  int count_class(VertexClass c) const;

  /// Tree edges as (tail, head) arcs: parent->child unless the arc points up.
  std::vector<std::pair<int, int>> arcs() const;

  /// Same tree viewed as an undirected graph, for brute-force comparisons.
  HostGraph as_graph() const;

 private:
  std::vector<int> parent_;
  int root_ = 0;
  bool directed_ = false;
  std::vector<char> arcDown_;
  std::vector<VertexClass> classes_;
  std::vector<std::vector<int>> children_;
  std::vector<int> preorder_;
  std::vector<int> subtreeSize_;
};

/// Graph file: header "V E u|d", then E lines "a b" (1-based), then optional
/// "# class v TAG" and "# root v" annotations. Class lines are emitted only for
/// classed graphs; vertices keep their in-memory order.
std::string serialize_graph(const HostGraph& g);
std::string serialize_tree(const PatternTree& t);

HostGraph parse_graph(std::istream& in);
HostGraph parse_graph(std::string_view text);

/// Reads a tree in graph format. Root comes from "# root v", else the unique
/// vertex with in-degree 0 (directed), else vertex 1.
PatternTree parse_tree(std::istream& in);
PatternTree parse_tree(std::string_view text);

/// `edges` distinct edges (arcs when directed) drawn uniformly, no self-loops.
/// Throws std::invalid_argument when more edges are requested than exist.
HostGraph random_graph(int vertices, int edges, bool directed, std::uint64_t seed);

/// Uniform random recursive tree rooted at vertex 0. Directed trees get a
/// random orientation per arc unless `arborescence` is set.
PatternTree random_tree(int k, bool directed, std::uint64_t seed, bool arborescence = false);

}  // namespace covertree
