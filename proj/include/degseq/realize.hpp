#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "degseq/bipartite.hpp"
#include "degseq/error.hpp"
#include "degseq/graph.hpp"
#include "degseq/sequence.hpp"
#include "degseq/witness.hpp"

namespace degseq {

namespace detail {

/// Havel–Hakimi on positional degrees: the vertex of largest residual degree
/// (lowest index on ties) is joined to the next largest residuals.
inline Graph havel_hakimi_positional(const std::vector<int>& degrees) {
  const int n = static_cast<int>(degrees.size());
  Graph g(n);
  std::vector<int> residual = degrees;
  std::vector<char> done(n, 0);
  std::vector<int> order(n);
  for (int step = 0; step < n; ++step) {
    int v = -1;
    for (int u = 0; u < n; ++u) {
      if (!done[u] && (v == -1 || residual[u] > residual[v])) v = u;
    }
    if (v == -1 || residual[v] == 0) break;
    done[v] = 1;
    order.clear();
    for (int u = 0; u < n; ++u) {
      if (!done[u] && residual[u] > 0) order.push_back(u);
    }
    if (static_cast<int>(order.size()) < residual[v]) {
      fail(ErrorKind::NotGraphic, "degree sequence is not graphic");
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return residual[a] > residual[b]; });
    for (int i = 0; i < residual[v]; ++i) {
      g.add_edge(v, order[i]);
      --residual[order[i]];
    }
    residual[v] = 0;
  }
  for (int u = 0; u < n; ++u) {
    if (residual[u] != 0) fail(ErrorKind::NotGraphic, "degree sequence is not graphic");
  }
  return g;
}

/// Forest on positional degrees. Surplus components are split off as K_2's
/// made of the lowest-degree leaves; the rest becomes one tree by repeatedly
/// hanging the last remaining leaf on the first vertex of residual >= 2.
inline Graph forest_positional(const std::vector<int>& degrees) {
  const int n = static_cast<int>(degrees.size());
  Graph g(n);
  std::vector<int> active;
  std::int64_t total = 0;
  for (int v = 0; v < n; ++v) {
    if (degrees[v] < 0) fail(ErrorKind::NotForestSequence, "negative degree");
    if (degrees[v] > 0) active.push_back(v);
    total += degrees[v];
  }
  const int p = static_cast<int>(active.size());
  if (p == 0) return g;
  if (total % 2 != 0 || total > 2 * static_cast<std::int64_t>(p) - 2) {
    fail(ErrorKind::NotForestSequence, "no forest has this degree sequence");
  }
  std::stable_sort(active.begin(), active.end(),
                   [&](int a, int b) { return degrees[a] > degrees[b]; });
  const int edges = static_cast<int>(total / 2);
  const int extra_components = p - edges - 1;
  // The positive part has at least 2(p - edges) leaves, all at the back.
  for (int c = 0; c < extra_components; ++c) {
    int a = active.back();
    active.pop_back();
    int b = active.back();
    active.pop_back();
    g.add_edge(std::min(a, b), std::max(a, b));
  }
  std::vector<int> residual(n, 0);
  for (int v : active) residual[v] = degrees[v];
  while (true) {
    auto hub = std::find_if(active.begin(), active.end(), [&](int v) { return residual[v] >= 2; });
    if (hub == active.end()) break;
    auto leaf = std::find_if(active.rbegin(), active.rend(), [&](int v) { return residual[v] == 1; });
    if (leaf == active.rend()) fail(ErrorKind::InternalError, "forest construction ran out of leaves");
    g.add_edge(*hub, *leaf);
    --residual[*hub];
    residual[*leaf] = 0;
  }
  std::vector<int> last;
  for (int v : active) {
    if (residual[v] == 1) last.push_back(v);
  }
  if (last.size() != 2) fail(ErrorKind::InternalError, "forest construction did not close");
  g.add_edge(last[0], last[1]);
  return g;
}

/// Forest realizing the sorted positive sequence d in which positions k..n-1
/// span no edge. Requires Σ_{i<k} d_i >= Σ_{i>=k} d_i.
inline Graph lemma1_graph(const std::vector<int>& d, int k) {
  const int n = static_cast<int>(d.size());
  const std::int64_t total = std::accumulate(d.begin(), d.end(), std::int64_t{0});

  if (total == n) {
    // All ones: a perfect matching pairing i with i + n/2 keeps the bottom
    // half free of edges since k >= n/2.
    Graph g(n);
    for (int i = 0; i < n / 2; ++i) g.add_edge(i, i + n / 2);
    return g;
  }
  if (k >= n) return forest_positional(d);

  if (d[0] > d[k]) {
    // Drop the last (degree 1) vertex, lower d_1, recurse, re-hang the leaf on u_1.
    std::vector<int> reduced(d.begin(), d.end() - 1);
    reduced[0] -= 1;
    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return reduced[a] > reduced[b]; });
    std::vector<int> sorted(reduced.size());
    std::vector<int> to_outer(reduced.size());
    for (int p = 0; p < static_cast<int>(reduced.size()); ++p) {
      const int src = p < k ? order[p] : p;
      sorted[p] = reduced[src];
      to_outer[p] = src;
    }
    Graph inner = lemma1_graph(sorted, k);
    Graph g(n);
    for (auto [u, v] : inner.edges()) g.add_edge(to_outer[u], to_outer[v]);
    g.add_edge(0, n - 1);
    return g;
  }

  // d_1 = d_{k+1} = l: contract the star u_{k+1}; u_1..u_l into one vertex of
  // degree l(l-1), recurse, then expand it again.
  const int l = d[0];
  if (l < 2 || l > k) fail(ErrorKind::InternalError, "forest recursion left its invariants");
  std::vector<int> contracted;
  contracted.push_back(l * (l - 1));
  for (int i = l; i < k; ++i) contracted.push_back(d[i]);
  for (int i = k + 1; i < n; ++i) contracted.push_back(d[i]);
  Graph inner = lemma1_graph(contracted, k - l + 1);

  auto to_outer = [&](int j) { return j <= k - l ? j + l - 1 : j + l; };
  Graph g(n);
  for (int i = 0; i < l; ++i) g.add_edge(i, k);
  int next = 0;
  for (auto [u, v] : inner.edges()) {
    if (u == 0) {
      g.add_edge(next % l, to_outer(v));
      ++next;
    } else {
      g.add_edge(to_outer(u), to_outer(v));
    }
  }
  return g;
}

/// Rao's reduction: makes positions 0..k-1 a clique, spends the remaining
/// degree of each clique vertex on the largest outside residuals, and returns
/// the outside residual sequence (positions k..n-1). Empty optional when the
/// reduction breaks down. If `g` is given, the edges used are recorded.
inline std::optional<std::vector<int>> rao_reduce(const std::vector<int>& d, int k, Graph* g) {
  const int n = static_cast<int>(d.size());
  if (k < 1 || k > n || d[k - 1] < k - 1) return std::nullopt;
  std::vector<int> residual = d;
  std::vector<int> outside(n - k);
  std::iota(outside.begin(), outside.end(), k);
  for (int i = 0; i < k; ++i) {
    const int need = residual[i] - (k - 1 - i);
    if (need < 0) return std::nullopt;
    for (int j = i + 1; j < k; ++j) {
      if (g) g->add_edge(i, j);
      --residual[j];
    }
    if (need > static_cast<int>(outside.size())) return std::nullopt;
    for (int t = 0; t < need; ++t) {
      const int w = outside[t];
      if (residual[w] == 0) return std::nullopt;
      if (g) g->add_edge(i, w);
      --residual[w];
    }
    residual[i] = 0;
    std::sort(outside.begin(), outside.end(), [&](int a, int b) {
      return residual[a] != residual[b] ? residual[a] > residual[b] : a < b;
    });
  }
  std::vector<int> rest(residual.begin() + k, residual.end());
  return rest;
}

inline void require_positive_forest(const DegreeSequence& d, int k) {
  if (d.count_eq(0) > 0) fail(ErrorKind::PreconditionViolated, "sequence has zero entries");
  if (d.total() % 2 != 0 || d.total() > 2 * static_cast<std::int64_t>(d.n()) - 2) {
    fail(ErrorKind::NotForestSequence, "degree sum must be even and at most 2n-2");
  }
  if (k < 1 || k > d.n()) {
    fail(ErrorKind::PreconditionViolated, "k=" + std::to_string(k) + " outside 1.." + std::to_string(d.n()));
  }
}

}  // namespace detail

/// Deterministic Havel–Hakimi realization of d (positional degrees).
inline Graph havel_hakimi_realize(const DegreeSequence& d) {
  if (!is_graphic(d)) fail(ErrorKind::NotGraphic, "degree sequence is not graphic");
  return detail::havel_hakimi_positional(d.entries());
}

/// Acyclic realization of d (positional degrees).
inline Graph forest_realize(const DegreeSequence& d) {
  if (!is_forest_sequence(d)) fail(ErrorKind::NotForestSequence, "no forest has this degree sequence");
  return detail::forest_positional(d.entries());
}

/// Realization in which u_1..u_k form a clique; fails if no such realization
/// exists.
inline Graph rao_clique_realize(const DegreeSequence& d, int k) {
  Graph g(d.n());
  auto rest = detail::rao_reduce(d.entries(), k, &g);
  if (!rest || !detail::is_graphic_values(*rest)) {
    fail(ErrorKind::PreconditionViolated, "no realization has a clique on the top " + std::to_string(k));
  }
  Graph outside = detail::havel_hakimi_positional(*rest);
  for (auto [u, v] : outside.edges()) g.add_edge(u + k, v + k);
  return g;
}

/// Forest realization of a positive forest sequence whose bottom n-k vertices
/// are independent; D = {u_1..u_k} then dominates.
inline RealizationWitness lemma1_construct(const DegreeSequence& d, int k) {
  detail::require_positive_forest(d, k);
  if (d.prefix(k) < d.suffix(k)) {
    fail(ErrorKind::PreconditionViolated,
         "top-" + std::to_string(k) + " degree sum " + std::to_string(d.prefix(k)) +
             " is below the remaining sum " + std::to_string(d.suffix(k)));
  }
  Graph g = detail::lemma1_graph(d.entries(), k);
  return RealizationWitness::make(std::move(g), d, k,
                                  {Claim::IsForest, Claim::DBarIndependent, Claim::DDominating});
}

/// Same contract as lemma1_construct: D dominating and D̄ independent.
inline RealizationWitness lemma2_construct_dominating_top(const DegreeSequence& d, int k) {
  return lemma1_construct(d, k);
}

/// Forest realization in which D = {u_1..u_k} is an independent dominating
/// set. Built from a bounded-degree bipartite graph between D and D̄ plus a
/// forest inside D̄; cycles are removed by exchanging cross edges between a
/// cyclic component and another component.
inline RealizationWitness lemma2_construct_independent_dominating(const DegreeSequence& d, int k) {
  detail::require_positive_forest(d, k);
  const int n = d.n();
  const std::int64_t top = d.prefix(k);
  const std::int64_t surplus = d.suffix(k) - top;
  const std::int64_t slack = std::max<std::int64_t>(0, 2 * (d.count_ge(2) - k) - 2);
  std::string violated;
  if (top < n - k) violated += " top-k sum below n-k;";
  if (surplus < 0 || surplus > slack) {
    violated += " remaining-minus-top sum " + std::to_string(surplus) + " outside [0," +
                std::to_string(slack) + "];";
  }
  if (!violated.empty()) fail(ErrorKind::PreconditionViolated, "independent dominating split:" + violated);

  const std::vector<Claim> claims{Claim::IsForest, Claim::DIndependent, Claim::DDominating};
  if (surplus == 0) {
    return RealizationWitness::make(detail::lemma1_graph(d.entries(), k), d, k, claims);
  }

  const int r = static_cast<int>(std::min<std::int64_t>(surplus, d.count_ge(2) - k));
  std::vector<int> left(d.entries().begin(), d.entries().begin() + k);
  std::vector<int> lower_right(n - k, 1);
  std::vector<int> upper_right(n - k);
  for (int j = 0; j < n - k; ++j) upper_right[j] = d[k + j] - (j < r ? 1 : 0);
  Graph f;
  try {
    f = build_bounded_bipartite(BipartiteDegreeSpec(left, left, lower_right, upper_right));
  } catch (const Error& e) {
    fail(ErrorKind::InternalError, std::string("cross graph infeasible: ") + e.what());
  }

  std::vector<int> residual(n - k);
  for (int j = 0; j < n - k; ++j) residual[j] = d[k + j] - f.degree(k + j);
  Graph inside = detail::forest_positional(residual);
  for (auto [u, v] : inside.edges()) f.add_edge(u + k, v + k);

  auto connected_without = [&](const Graph& g, int a, int b) {
    std::vector<char> seen(g.n(), 0);
    std::vector<int> stack{a};
    seen[a] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : g.neighbors(x)) {
        if ((x == a && y == b) || (x == b && y == a) || seen[y]) continue;
        if (y == b) return true;
        seen[y] = 1;
        stack.push_back(y);
      }
    }
    return false;
  };

  for (int iter = 0; !f.is_forest(); ++iter) {
    if (iter >= n) fail(ErrorKind::InternalRepairFailure, "cycle repair did not converge");
    const auto label = f.components();
    const int comps = *std::max_element(label.begin(), label.end()) + 1;
    std::vector<int> verts(comps, 0), edges(comps, 0);
    for (int v = 0; v < n; ++v) ++verts[label[v]];
    const auto all_edges = f.edges();
    for (auto [u, v] : all_edges) ++edges[label[u]];
    int cyclic = -1;
    for (int c = 0; c < comps && cyclic < 0; ++c) {
      if (edges[c] >= verts[c]) cyclic = c;
    }
    const int other = cyclic == 0 ? 1 : 0;
    std::optional<Edge> on_cycle;
    std::optional<Edge> elsewhere;
    for (auto e : all_edges) {
      auto [u, v] = e;
      if (!(u < k && v >= k)) continue;
      if (label[u] == cyclic && !on_cycle && connected_without(f, u, v)) on_cycle = e;
      if (label[u] == other && !elsewhere) elsewhere = e;
    }
    if (!on_cycle || !elsewhere) fail(ErrorKind::InternalRepairFailure, "cycle repair found no exchange");
    auto [u, v] = *on_cycle;
    auto [x, y] = *elsewhere;
    f.remove_edge(x, y);
    f.remove_edge(u, v);
    f.add_edge(x, v);
    f.add_edge(u, y);
    if (f.component_count() != comps - 1) {
      fail(ErrorKind::InternalRepairFailure, "cross-edge exchange did not merge components");
    }
  }
  return RealizationWitness::make(std::move(f), d, k, claims);
}

}  // namespace degseq
