#pragma once

// Deliberately simple reference implementations used as test oracles. Nothing
// here shares code with the library beyond the Graph container.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "degseq/graph.hpp"

namespace naive {

struct Adj {
  int n = 0;
  std::vector<std::vector<char>> a;

  explicit Adj(int n_) : n(n_), a(n_, std::vector<char>(n_, 0)) {}

  explicit Adj(const degseq::Graph& g) : Adj(g.n()) {
    for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = 1;
  }

  std::vector<int> degrees() const {
    std::vector<int> d(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i] += a[i][j];
    return d;
  }

  degseq::Graph to_graph() const {
    degseq::Graph g(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (a[i][j]) g.add_edge(i, j);
    return g;
  }
};

inline bool dominates(const Adj& g, std::uint32_t set) {
  for (int v = 0; v < g.n; ++v) {
    if (set >> v & 1) continue;
    bool hit = false;
    for (int u = 0; u < g.n && !hit; ++u) hit = (set >> u & 1) && g.a[u][v];
    if (!hit) return false;
  }
  return true;
}

inline bool independent(const Adj& g, std::uint32_t set) {
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if ((set >> u & 1) && (set >> v & 1) && g.a[u][v]) return false;
  return true;
}

inline bool clique(const Adj& g, std::uint32_t set) {
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if ((set >> u & 1) && (set >> v & 1) && !g.a[u][v]) return false;
  return true;
}

inline int popcount(std::uint32_t s) { return __builtin_popcount(s); }

inline int domination(const Adj& g) {
  int best = g.n;
  for (std::uint32_t s = 0; s < (1u << g.n); ++s)
    if (popcount(s) < best && dominates(g, s)) best = popcount(s);
  return best;
}

inline int independence(const Adj& g) {
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << g.n); ++s)
    if (popcount(s) > best && independent(g, s)) best = popcount(s);
  return best;
}

inline int clique_number(const Adj& g) {
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << g.n); ++s)
    if (popcount(s) > best && clique(g, s)) best = popcount(s);
  return best;
}

inline bool acyclic(const Adj& g) {
  std::vector<int> parent(g.n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v) {
      if (!g.a[u][v]) continue;
      int ru = find(u), rv = find(v);
      if (ru == rv) return false;
      parent[ru] = rv;
    }
  return true;
}

/// Every labeled simple graph on n vertices (all 2^(n(n-1)/2) edge subsets).
inline void for_each_graph(int n, const std::function<void(const Adj&)>& fn) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  Adj g(n);
  for (std::uint64_t s = 0; s < total; ++s) {
    for (std::size_t e = 0; e < pairs.size(); ++e) {
      auto [u, v] = pairs[e];
      g.a[u][v] = g.a[v][u] = static_cast<char>(s >> e & 1);
    }
    fn(g);
  }
}

/// Sum of the k largest entries of a non-increasing sequence.
inline long long top_sum(const std::vector<int>& d, int k) {
  return std::accumulate(d.begin(), d.begin() + k, 0LL);
}

/// min{k in [n] : d_1 + ... + d_k >= n - k}, read straight off the definition.
inline int slater(const std::vector<int>& d) {
  const int n = static_cast<int>(d.size());
  for (int k = 1; k <= n; ++k)
    if (top_sum(d, k) >= n - k) return k;
  return n;
}

/// Largest a such that the a smallest entries sum to at most the rest.
inline int annihilation(std::vector<int> d) {
  std::sort(d.begin(), d.end());
  const long long total = std::accumulate(d.begin(), d.end(), 0LL);
  int best = 0;
  long long low = 0;
  for (int a = 1; a <= static_cast<int>(d.size()); ++a) {
    low += d[a - 1];
    if (low <= total - low) best = a;
  }
  return best;
}

/// Brute-force existence of a bipartite graph between left m and right n
/// vertices with every degree inside its [lo, hi] window.
inline bool bipartite_exists(const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& ap,
                             const std::vector<int>& bp) {
  const int m = static_cast<int>(a.size());
  const int n = static_cast<int>(ap.size());
  const int cells = m * n;
  for (std::uint32_t s = 0; s < (1u << cells); ++s) {
    bool ok = true;
    for (int i = 0; i < m && ok; ++i) {
      int deg = 0;
      for (int j = 0; j < n; ++j) deg += s >> (i * n + j) & 1;
      ok = a[i] <= deg && deg <= b[i];
    }
    for (int j = 0; j < n && ok; ++j) {
      int deg = 0;
      for (int i = 0; i < m; ++i) deg += s >> (i * n + j) & 1;
      ok = ap[j] <= deg && deg <= bp[j];
    }
    if (ok) return true;
  }
  return false;
}

/// Random connected graph: a random spanning tree plus `extra` random edges.
inline degseq::Graph random_connected(int n, int extra, std::mt19937& rng) {
  degseq::Graph g(n);
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    g.add_edge(pick(rng), v);
  }
  const int max_edges = n * (n - 1) / 2;
  std::uniform_int_distribution<int> vert(0, n - 1);
  while (extra > 0 && g.edge_count() < max_edges) {
    int u = vert(rng), v = vert(rng);
    if (u == v || g.has_edge(u, v)) continue;
    g.add_edge(u, v);
    --extra;
  }
  return g;
}

inline degseq::Graph random_graph(int n, double p, std::mt19937& rng) {
  degseq::Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

}  // namespace naive
