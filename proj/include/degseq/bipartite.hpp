#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "degseq/error.hpp"
#include "degseq/graph.hpp"

namespace degseq {

/// Degree bounds for a bipartite graph with left class u_1..u_m and right
/// class v_1..v_n: a_i <= d(u_i) <= b_i and a'_j <= d(v_j) <= b'_j.
///
/// Bounds are kept in input order; `left_order()`/`right_order()` list the
/// vertices by non-increasing lower bound (ties by index), upper bounds
/// travelling with their vertex.
class BipartiteDegreeSpec {
 public:
  BipartiteDegreeSpec(std::vector<int> lower_left, std::vector<int> upper_left,
                      std::vector<int> lower_right, std::vector<int> upper_right)
      : a_(std::move(lower_left)),
        b_(std::move(upper_left)),
        ap_(std::move(lower_right)),
        bp_(std::move(upper_right)) {
    if (a_.size() != b_.size() || ap_.size() != bp_.size()) {
      fail(ErrorKind::PreconditionViolated, "bipartite spec: bound vectors differ in length");
    }
    check_bounds(a_, b_, "left");
    check_bounds(ap_, bp_, "right");
    left_order_ = order_by_lower(a_);
    right_order_ = order_by_lower(ap_);
  }

  /// Exact-degree spec: a = b, a' = b'.
  static BipartiteDegreeSpec exact(std::vector<int> left, std::vector<int> right) {
    return BipartiteDegreeSpec(left, left, right, right);
  }

  int m() const noexcept { return static_cast<int>(a_.size()); }
  int n() const noexcept { return static_cast<int>(ap_.size()); }
  const std::vector<int>& lower_left() const noexcept { return a_; }
  const std::vector<int>& upper_left() const noexcept { return b_; }
  const std::vector<int>& lower_right() const noexcept { return ap_; }
  const std::vector<int>& upper_right() const noexcept { return bp_; }
  const std::vector<int>& left_order() const noexcept { return left_order_; }
  const std::vector<int>& right_order() const noexcept { return right_order_; }

  std::vector<int> sorted_lower_left() const { return permuted(a_, left_order_); }
  std::vector<int> sorted_lower_right() const { return permuted(ap_, right_order_); }

 private:
  static void check_bounds(const std::vector<int>& lo, const std::vector<int>& hi,
                           const char* side) {
    for (std::size_t i = 0; i < lo.size(); ++i) {
      if (lo[i] < 0 || lo[i] > hi[i]) {
        fail(ErrorKind::PreconditionViolated,
             std::string("bipartite spec: ") + side + " vertex " + std::to_string(i + 1) +
                 " has bounds [" + std::to_string(lo[i]) + "," + std::to_string(hi[i]) + "]");
      }
    }
  }
  static std::vector<int> order_by_lower(const std::vector<int>& lo) {
    std::vector<int> order(lo.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return lo[x] > lo[y]; });
    return order;
  }
  static std::vector<int> permuted(const std::vector<int>& v, const std::vector<int>& order) {
    std::vector<int> out;
    out.reserve(v.size());
    for (int i : order) out.push_back(v[i]);
    return out;
  }

  std::vector<int> a_, b_, ap_, bp_;
  std::vector<int> left_order_, right_order_;
};

namespace detail {

/// Σ_{i<=k} lower_i <= Σ_j min(k, upper'_j) for every k in [|lower|].
inline bool gale_ryser_side(const std::vector<int>& sorted_lower, const std::vector<int>& other_upper) {
  std::int64_t lhs = 0;
  for (std::size_t k = 1; k <= sorted_lower.size(); ++k) {
    lhs += sorted_lower[k - 1];
    std::int64_t rhs = 0;
    for (int u : other_upper) rhs += std::min<std::int64_t>(static_cast<std::int64_t>(k), u);
    if (lhs > rhs) return false;
  }
  return true;
}

/// Dense-capacity max flow with DFS augmenting paths. Arcs are explored in
/// increasing vertex order so results are reproducible.
class DenseFlow {
 public:
  explicit DenseFlow(int nodes) : n_(nodes), cap_(static_cast<std::size_t>(nodes) * nodes, 0) {}

  void add(int u, int v, int c) { cap_[idx(u, v)] += c; }
  int residual(int u, int v) const { return cap_[idx(u, v)]; }

  int max_flow(int s, int t) {
    int flow = 0;
    std::vector<char> seen(n_);
    while (true) {
      std::fill(seen.begin(), seen.end(), 0);
      int pushed = augment(s, t, std::numeric_limits<int>::max(), seen);
      if (pushed == 0) break;
      flow += pushed;
    }
    return flow;
  }

 private:
  std::size_t idx(int u, int v) const { return static_cast<std::size_t>(u) * n_ + v; }

  int augment(int u, int t, int limit, std::vector<char>& seen) {
    if (u == t) return limit;
    seen[u] = 1;
    for (int v = 0; v < n_; ++v) {
      int c = cap_[idx(u, v)];
      if (c > 0 && !seen[v]) {
        int got = augment(v, t, std::min(limit, c), seen);
        if (got > 0) {
          cap_[idx(u, v)] -= got;
          cap_[idx(v, u)] += got;
          return got;
        }
      }
    }
    return 0;
  }

  int n_;
  std::vector<int> cap_;
};

}  // namespace detail

/// Gale–Ryser feasibility with lower and upper degree bounds on both sides.
inline bool gale_ryser_feasible(const BipartiteDegreeSpec& spec) {
  return detail::gale_ryser_side(spec.sorted_lower_left(), spec.upper_right()) &&
         detail::gale_ryser_side(spec.sorted_lower_right(), spec.upper_left());
}

/// Left vertex i becomes graph vertex i, right vertex j becomes m + j.
inline Graph build_bounded_bipartite(const BipartiteDegreeSpec& spec) {
  if (!gale_ryser_feasible(spec)) {
    fail(ErrorKind::Infeasible, "bipartite spec violates the Gale-Ryser conditions");
  }
  const int m = spec.m();
  const int n = spec.n();
  // Circulation s -> left [a,b] -> right [0,1] -> t [a',b'] -> s, with lower
  // bounds moved onto a super source/sink.
  const int s = m + n;
  const int t = s + 1;
  const int ss = t + 1;
  const int tt = ss + 1;
  detail::DenseFlow flow(tt + 1);
  std::vector<std::int64_t> excess(tt + 1, 0);
  int demand = 0;
  for (int i = 0; i < m; ++i) {
    flow.add(s, i, spec.upper_left()[i] - spec.lower_left()[i]);
    excess[i] += spec.lower_left()[i];
    excess[s] -= spec.lower_left()[i];
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) flow.add(i, m + j, 1);
  for (int j = 0; j < n; ++j) {
    flow.add(m + j, t, spec.upper_right()[j] - spec.lower_right()[j]);
    excess[t] += spec.lower_right()[j];
    excess[m + j] -= spec.lower_right()[j];
  }
  flow.add(t, s, std::numeric_limits<int>::max() / 4);
  for (int v = 0; v < ss; ++v) {
    if (excess[v] > 0) {
      flow.add(ss, v, static_cast<int>(excess[v]));
      demand += static_cast<int>(excess[v]);
    } else if (excess[v] < 0) {
      flow.add(v, tt, static_cast<int>(-excess[v]));
    }
  }
  if (flow.max_flow(ss, tt) != demand) {
    fail(ErrorKind::Infeasible, "no bipartite graph meets the lower degree bounds");
  }
  Graph g(m + n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      if (flow.residual(i, m + j) == 0) g.add_edge(i, m + j);
  return g;
}

/// True iff g (left 0..m-1, right m..m+n-1) has no edge inside a class and
/// meets every bound of `spec`.
inline bool audit_bipartite(const Graph& g, const BipartiteDegreeSpec& spec) {
  const int m = spec.m();
  if (g.n() != m + spec.n()) return false;
  for (auto [u, v] : g.edges()) {
    if ((u < m) == (v < m)) return false;
  }
  for (int i = 0; i < m; ++i) {
    if (g.degree(i) < spec.lower_left()[i] || g.degree(i) > spec.upper_left()[i]) return false;
  }
  for (int j = 0; j < spec.n(); ++j) {
    int d = g.degree(m + j);
    if (d < spec.lower_right()[j] || d > spec.upper_right()[j]) return false;
  }
  return true;
}

}  // namespace degseq
