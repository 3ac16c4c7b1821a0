#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "degseq/error.hpp"
#include "degseq/graph.hpp"

namespace degseq {

struct SolverOptions {
  /// Largest vertex count accepted by the exact solvers (at most 64).
  int max_vertices = 32;
};

/// Optimal value of a vertex-subset problem together with one optimal set.
struct VertexSetResult {
  int value = 0;
  std::vector<int> vertices;
};

namespace detail {

using Mask = std::uint64_t;

inline Mask bit(int v) { return Mask{1} << v; }
inline Mask all_bits(int n) { return n >= 64 ? ~Mask{0} : (bit(n) - 1); }

inline std::vector<int> mask_to_vertices(Mask m) {
  std::vector<int> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

inline void check_solver_size(int n, const SolverOptions& opts) {
  const int limit = std::min(opts.max_vertices, Graph::kMaskLimit);
  if (n > limit) {
    fail(ErrorKind::TooLarge, "graph has " + std::to_string(n) +
                                  " vertices; exact solver limit is " + std::to_string(limit));
  }
}

/// Minimum dominating set as a set cover over closed neighborhoods.
/// Branches on the undominated vertex with the fewest admissible dominators;
/// dominators tried in earlier sibling branches are excluded afterwards.
class DominationSearch {
 public:
  DominationSearch(std::span<const Mask> closed, int n) : closed_(closed), n_(n), full_(all_bits(n)) {}

  Mask solve() {
    best_ = greedy();
    best_size_ = std::popcount(best_);
    recurse(0, 0, 0, 0);
    return best_;
  }

 private:
  Mask greedy() const {
    Mask dominated = 0;
    Mask chosen = 0;
    while (dominated != full_) {
      int pick = -1;
      int gain = -1;
      for (int u = 0; u < n_; ++u) {
        int g = std::popcount(closed_[u] & ~dominated);
        if (g > gain) {
          gain = g;
          pick = u;
        }
      }
      chosen |= bit(pick);
      dominated |= closed_[pick];
    }
    return chosen;
  }

  void recurse(Mask dominated, Mask chosen, Mask excluded, int size) {
    if (dominated == full_) {
      if (size < best_size_) {
        best_size_ = size;
        best_ = chosen;
      }
      return;
    }
    if (size + 1 >= best_size_) return;

    const Mask undominated = full_ & ~dominated;
    int max_gain = 0;
    for (int u = 0; u < n_; ++u) {
      if ((excluded >> u) & 1U) continue;
      max_gain = std::max(max_gain, std::popcount(closed_[u] & undominated));
    }
    if (max_gain == 0) return;
    const int remaining = std::popcount(undominated);
    const int lower = (remaining + max_gain - 1) / max_gain;
    if (size + lower >= best_size_) return;

    int pivot = -1;
    int options = n_ + 1;
    for (Mask m = undominated; m; m &= m - 1) {
      int v = std::countr_zero(m);
      int c = std::popcount(closed_[v] & ~excluded);
      if (c < options) {
        options = c;
        pivot = v;
      }
    }
    if (options == 0) return;

    std::vector<int> candidates = mask_to_vertices(closed_[pivot] & ~excluded);
    std::stable_sort(candidates.begin(), candidates.end(), [&](int a, int b) {
      return std::popcount(closed_[a] & undominated) > std::popcount(closed_[b] & undominated);
    });
    Mask banned = excluded;
    for (int u : candidates) {
      recurse(dominated | closed_[u], chosen | bit(u), banned, size + 1);
      banned |= bit(u);
    }
  }

  std::span<const Mask> closed_;
  int n_;
  Mask full_;
  Mask best_ = 0;
  int best_size_ = 0;
};

/// Maximum clique with a greedy-colouring bound.
class CliqueSearch {
 public:
  CliqueSearch(std::span<const Mask> adj, int n) : adj_(adj), n_(n) {}

  Mask solve() {
    if (n_ == 0) return 0;
    expand(all_bits(n_), 0, 0);
    return best_;
  }

 private:
  void expand(Mask candidates, Mask current, int size) {
    std::vector<int> order;
    std::vector<int> colour;
    colour_sort(candidates, order, colour);
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (size + colour[i] <= best_size_) return;
      const int v = order[i];
      const Mask next = candidates & adj_[v];
      if (next == 0) {
        if (size + 1 > best_size_) {
          best_size_ = size + 1;
          best_ = current | bit(v);
        }
      } else {
        expand(next, current | bit(v), size + 1);
      }
      candidates &= ~bit(v);
    }
  }

  void colour_sort(Mask candidates, std::vector<int>& order, std::vector<int>& colour) const {
    int c = 0;
    Mask uncoloured = candidates;
    while (uncoloured) {
      ++c;
      Mask avail = uncoloured;
      while (avail) {
        int v = std::countr_zero(avail);
        avail &= ~adj_[v] & ~bit(v);
        uncoloured &= ~bit(v);
        order.push_back(v);
        colour.push_back(c);
      }
    }
  }

  std::span<const Mask> adj_;
  int n_;
  Mask best_ = 0;
  int best_size_ = 0;
};

inline Mask min_dominating_mask(std::span<const Mask> adj, int n) {
  std::vector<Mask> closed(adj.begin(), adj.end());
  for (int v = 0; v < n; ++v) closed[v] |= bit(v);
  return DominationSearch(closed, n).solve();
}

inline Mask max_clique_mask(std::span<const Mask> adj, int n) {
  return CliqueSearch(adj, n).solve();
}

inline Mask max_independent_mask(std::span<const Mask> adj, int n) {
  std::vector<Mask> co(n);
  const Mask full = all_bits(n);
  for (int v = 0; v < n; ++v) co[v] = full & ~adj[v] & ~bit(v);
  return CliqueSearch(co, n).solve();
}

}  // namespace detail

/// Exact domination number γ(g) and one minimum dominating set.
inline VertexSetResult domination_number(const Graph& g, const SolverOptions& opts = {}) {
  if (g.n() == 0) fail(ErrorKind::PreconditionViolated, "domination number needs at least one vertex");
  detail::check_solver_size(g.n(), opts);
  auto set = detail::min_dominating_mask(g.masks(), g.n());
  return {std::popcount(set), detail::mask_to_vertices(set)};
}

/// Exact independence number α(g) and one maximum independent set.
inline VertexSetResult independence_number(const Graph& g, const SolverOptions& opts = {}) {
  detail::check_solver_size(g.n(), opts);
  auto set = detail::max_independent_mask(g.masks(), g.n());
  return {std::popcount(set), detail::mask_to_vertices(set)};
}

/// Exact clique number ω(g), i.e. the independence number of the complement.
inline VertexSetResult clique_number(const Graph& g, const SolverOptions& opts = {}) {
  detail::check_solver_size(g.n(), opts);
  auto set = detail::max_clique_mask(g.masks(), g.n());
  return {std::popcount(set), detail::mask_to_vertices(set)};
}

inline bool is_dominating(const Graph& g, std::span<const int> set) {
  std::vector<char> covered(g.n(), 0);
  for (int v : set) {
    covered[v] = 1;
    for (int w : g.neighbors(v)) covered[w] = 1;
  }
  return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

inline bool is_independent(const Graph& g, std::span<const int> set) {
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j)
      if (g.has_edge(set[i], set[j])) return false;
  return true;
}

}  // namespace degseq
