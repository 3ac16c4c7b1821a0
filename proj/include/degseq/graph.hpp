#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "degseq/error.hpp"
#include "degseq/sequence.hpp"

namespace degseq {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1.
///
/// Neighbor lists are kept sorted. For n <= 64 a bitmask per vertex mirrors
/// the neighbor list; the exact solvers work on those masks.
class Graph {
 public:
  static constexpr int kMaskLimit = 64;

  Graph() = default;
  explicit Graph(int n) : adj_(n) {
    if (n < 0) fail(ErrorKind::PreconditionViolated, "negative vertex count");
    if (n <= kMaskLimit) masks_.assign(n, 0);
  }
  Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int n() const noexcept { return static_cast<int>(adj_.size()); }
  int edge_count() const noexcept { return edge_count_; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  bool has_masks() const noexcept { return n() <= kMaskLimit; }

  std::uint64_t neighbor_mask(int v) const { return masks_[v]; }
  std::uint64_t closed_mask(int v) const { return masks_[v] | (std::uint64_t{1} << v); }
  std::span<const std::uint64_t> masks() const { return masks_; }

  bool has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n() || v >= n()) return false;
    if (has_masks()) return (masks_[u] >> v) & 1U;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) fail(ErrorKind::PreconditionViolated, "self-loop at vertex " + std::to_string(u + 1));
    if (has_edge(u, v)) {
      fail(ErrorKind::PreconditionViolated,
           "duplicate edge " + std::to_string(u + 1) + "-" + std::to_string(v + 1));
    }
    insert_sorted(adj_[u], v);
    insert_sorted(adj_[v], u);
    if (has_masks()) {
      masks_[u] |= std::uint64_t{1} << v;
      masks_[v] |= std::uint64_t{1} << u;
    }
    ++edge_count_;
  }

  void remove_edge(int u, int v) {
    if (!has_edge(u, v)) {
      fail(ErrorKind::PreconditionViolated,
           "no edge " + std::to_string(u + 1) + "-" + std::to_string(v + 1));
    }
    adj_[u].erase(std::lower_bound(adj_[u].begin(), adj_[u].end(), v));
    adj_[v].erase(std::lower_bound(adj_[v].begin(), adj_[v].end(), u));
    if (has_masks()) {
      masks_[u] &= ~(std::uint64_t{1} << v);
      masks_[v] &= ~(std::uint64_t{1} << u);
    }
    --edge_count_;
  }

  /// Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (int u = 0; u < n(); ++u) {
      for (int v : adj_[u]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  std::vector<int> degrees() const {
    std::vector<int> out(n());
    for (int v = 0; v < n(); ++v) out[v] = degree(v);
    return out;
  }

  /// Component label per vertex; labels are 0,1,... in order of the lowest
  /// vertex of each component.
  std::vector<int> components() const {
    std::vector<int> label(n(), -1);
    std::vector<int> stack;
    int next = 0;
    for (int s = 0; s < n(); ++s) {
      if (label[s] != -1) continue;
      label[s] = next;
      stack.push_back(s);
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : adj_[u]) {
          if (label[w] == -1) {
            label[w] = next;
            stack.push_back(w);
          }
        }
      }
      ++next;
    }
    return label;
  }

  int component_count() const {
    auto label = components();
    return label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
  }

  bool is_connected() const { return n() <= 1 || component_count() == 1; }
  /// A graph is a forest iff m = n - c.
  bool is_forest() const { return edge_count_ == n() - component_count(); }

  Graph complement() const {
    Graph g(n());
    for (int u = 0; u < n(); ++u) {
      for (int v = u + 1; v < n(); ++v) {
        if (!has_edge(u, v)) g.add_edge(u, v);
      }
    }
    return g;
  }

  /// Vertices of `other` are appended after the vertices of *this.
  Graph disjoint_union(const Graph& other) const {
    Graph g(n() + other.n());
    for (auto [u, v] : edges()) g.add_edge(u, v);
    for (auto [u, v] : other.edges()) g.add_edge(u + n(), v + n());
    return g;
  }

  bool operator==(const Graph& other) const { return adj_ == other.adj_; }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n()) {
      fail(ErrorKind::PreconditionViolated,
           "vertex " + std::to_string(v + 1) + " out of range 1.." + std::to_string(n()));
    }
  }
  static void insert_sorted(std::vector<int>& list, int v) {
    list.insert(std::lower_bound(list.begin(), list.end(), v), v);
  }

  std::vector<std::vector<int>> adj_;
  std::vector<std::uint64_t> masks_;
  int edge_count_ = 0;
};

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph cycle_graph(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

inline Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

/// K_{1,leaves} with the center at vertex 0.
inline Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

inline DegreeSequence degree_sequence(const Graph& g) {
  if (g.n() == 0) fail(ErrorKind::InvalidSequence, "graph has no vertices");
  auto deg = g.degrees();
  return DegreeSequence::normalize(deg);
}

/// Returns g - xy - x'y' + xx' + yy'.
inline Graph two_switch(const Graph& g, Edge xy, Edge xy2) {
  auto [x, y] = xy;
  auto [x2, y2] = xy2;
  auto name = [](int a, int b) {
    return std::to_string(a + 1) + "-" + std::to_string(b + 1);
  };
  if (!g.has_edge(x, y)) fail(ErrorKind::PreconditionViolated, "2-switch: " + name(x, y) + " is not an edge");
  if (!g.has_edge(x2, y2)) fail(ErrorKind::PreconditionViolated, "2-switch: " + name(x2, y2) + " is not an edge");
  if (x == x2 || x == y2 || y == x2 || y == y2) {
    fail(ErrorKind::PreconditionViolated,
         "2-switch: edges " + name(x, y) + " and " + name(x2, y2) + " share a vertex");
  }
  if (g.has_edge(x, x2)) fail(ErrorKind::PreconditionViolated, "2-switch: " + name(x, x2) + " is already an edge");
  if (g.has_edge(y, y2)) fail(ErrorKind::PreconditionViolated, "2-switch: " + name(y, y2) + " is already an edge");
  Graph out = g;
  out.remove_edge(x, y);
  out.remove_edge(x2, y2);
  out.add_edge(x, x2);
  out.add_edge(y, y2);
  return out;
}

}  // namespace degseq
