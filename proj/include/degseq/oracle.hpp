#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "degseq/error.hpp"
#include "degseq/graph.hpp"
#include "degseq/sequence.hpp"
#include "degseq/solvers.hpp"

namespace degseq {

enum class RealizationClass { General, Forest };

inline std::string_view to_string(RealizationClass c) {
  return c == RealizationClass::General ? "GENERAL" : "FOREST";
}

struct OracleOptions {
  int general_limit = 8;
  int forest_limit = 9;
};

struct OracleReport {
  DegreeSequence sequence;
  RealizationClass realization_class = RealizationClass::General;
  std::uint64_t realization_count = 0;
  // Unset when the class is empty.
  std::optional<int> gamma_min, gamma_max;
  std::optional<int> alpha_min, alpha_max;
  std::optional<int> omega_min, omega_max;
};

namespace detail {

/// Backtracking over labeled realizations with d(u_i) = d_i. Vertex v picks
/// all of its neighbors among later vertices at once, so every graph is
/// produced exactly once. After each choice the residual degrees of the later
/// vertices must stay graphic; for forests every edge must join two
/// components and the remaining edges must fit between the components left.
class RealizationEnumerator {
 public:
  using Visitor = std::function<void(std::span<const Mask>, int)>;

  RealizationEnumerator(const std::vector<int>& degrees, RealizationClass cls, Visitor visit)
      : n_(static_cast<int>(degrees.size())),
        forest_(cls == RealizationClass::Forest),
        residual_(degrees),
        adj_(n_, 0),
        comp_(n_),
        visit_(std::move(visit)) {
    for (int v = 0; v < n_; ++v) comp_[v] = v;
  }

  std::uint64_t run() {
    if (!is_graphic_values(residual_)) return 0;
    place(0);
    return count_;
  }

 private:
  void place(int v) {
    while (v < n_ && residual_[v] == 0) ++v;
    if (v == n_) {
      ++count_;
      visit_(adj_, n_);
      return;
    }
    std::vector<int> cands;
    for (int w = v + 1; w < n_; ++w) {
      if (residual_[w] > 0 && (!forest_ || comp_[w] != comp_[v])) cands.push_back(w);
    }
    std::vector<int> chosen;
    choose(v, cands, 0, residual_[v], chosen);
  }

  void choose(int v, const std::vector<int>& cands, std::size_t from, int need, std::vector<int>& chosen) {
    if (need == 0) {
      commit(v, chosen);
      return;
    }
    if (cands.size() - from < static_cast<std::size_t>(need)) return;
    for (std::size_t i = from; i + need <= cands.size(); ++i) {
      const int w = cands[i];
      if (forest_) {
        bool clash = false;
        for (int c : chosen) clash = clash || comp_[c] == comp_[w];
        if (clash) continue;
      }
      chosen.push_back(w);
      choose(v, cands, i + 1, need - 1, chosen);
      chosen.pop_back();
    }
  }

  void commit(int v, const std::vector<int>& chosen) {
    const std::vector<int> saved_comp = forest_ ? comp_ : std::vector<int>{};
    const int saved = residual_[v];
    residual_[v] = 0;
    for (int w : chosen) {
      adj_[v] |= bit(w);
      adj_[w] |= bit(v);
      --residual_[w];
    }
    if (forest_) {
      for (int w : chosen) relabel(comp_[w], comp_[v]);
    }
    if (feasible_after(v)) place(v + 1);
    for (int w : chosen) {
      adj_[v] &= ~bit(w);
      adj_[w] &= ~bit(v);
      ++residual_[w];
    }
    residual_[v] = saved;
    if (forest_) comp_ = saved_comp;
  }

  void relabel(int from, int to) {
    if (from == to) return;
    for (int& c : comp_) {
      if (c == from) c = to;
    }
  }

  bool feasible_after(int v) const {
    std::vector<int> rest(residual_.begin() + v + 1, residual_.end());
    if (!is_graphic_values(rest)) return false;
    if (!forest_) return true;
    // Each remaining edge merges two components touching positive residuals.
    std::int64_t remaining = 0;
    std::vector<int> touched;
    for (int w = v + 1; w < n_; ++w) {
      if (residual_[w] > 0) {
        remaining += residual_[w];
        touched.push_back(comp_[w]);
      }
    }
    std::sort(touched.begin(), touched.end());
    const auto distinct = std::unique(touched.begin(), touched.end()) - touched.begin();
    return remaining / 2 <= std::max<std::int64_t>(0, distinct - 1);
  }

  int n_;
  bool forest_;
  std::vector<int> residual_;
  std::vector<Mask> adj_;
  std::vector<int> comp_;
  Visitor visit_;
  std::uint64_t count_ = 0;
};

inline void check_oracle_size(const DegreeSequence& d, RealizationClass cls, const OracleOptions& opts) {
  const int limit = cls == RealizationClass::General ? opts.general_limit : opts.forest_limit;
  if (d.n() > limit || d.n() > Graph::kMaskLimit) {
    fail(ErrorKind::TooLarge, "n=" + std::to_string(d.n()) + " exceeds the oracle limit " +
                                  std::to_string(limit) + " for " + std::string(to_string(cls)));
  }
}

}  // namespace detail

/// Visits every labeled realization (or forest realization) of d with
/// d(u_i) = d_i exactly once; returns the number visited.
inline std::uint64_t enumerate_realizations(const DegreeSequence& d, RealizationClass cls,
                                            const std::function<void(const Graph&)>& visit,
                                            const OracleOptions& opts = {}) {
  detail::check_oracle_size(d, cls, opts);
  detail::RealizationEnumerator e(d.entries(), cls, [&](std::span<const detail::Mask> adj, int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u) {
      for (int w : detail::mask_to_vertices(adj[u])) {
        if (w > u) g.add_edge(u, w);
      }
    }
    visit(g);
  });
  return e.run();
}

/// Exact extrema of γ, α and ω over every realization in the class.
inline OracleReport oracle_extrema(const DegreeSequence& d, RealizationClass cls, const OracleOptions& opts = {}) {
  detail::check_oracle_size(d, cls, opts);
  OracleReport report;
  report.sequence = d;
  report.realization_class = cls;
  auto widen = [](std::optional<int>& lo, std::optional<int>& hi, int v) {
    lo = lo ? std::min(*lo, v) : v;
    hi = hi ? std::max(*hi, v) : v;
  };
  detail::RealizationEnumerator e(d.entries(), cls, [&](std::span<const detail::Mask> adj, int n) {
    const int gamma = std::popcount(detail::min_dominating_mask(adj, n));
    const int alpha = std::popcount(detail::max_independent_mask(adj, n));
    const int omega = std::popcount(detail::max_clique_mask(adj, n));
    widen(report.gamma_min, report.gamma_max, gamma);
    widen(report.alpha_min, report.alpha_max, alpha);
    widen(report.omega_min, report.omega_max, omega);
  });
  report.realization_count = e.run();
  return report;
}

}  // namespace degseq
