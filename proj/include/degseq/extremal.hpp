#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "degseq/bipartite.hpp"
#include "degseq/error.hpp"
#include "degseq/graph.hpp"
#include "degseq/realize.hpp"
#include "degseq/sequence.hpp"
#include "degseq/solvers.hpp"
#include "degseq/witness.hpp"

namespace degseq {

enum class Parameter { OmegaMax, AlphaMax, GammaMin, GammaMinForest, AlphaMaxForest };

inline std::string_view to_string(Parameter p) {
  switch (p) {
    case Parameter::OmegaMax: return "OMEGA_MAX";
    case Parameter::AlphaMax: return "ALPHA_MAX";
    case Parameter::GammaMin: return "GAMMA_MIN";
    case Parameter::GammaMinForest: return "GAMMA_MIN_F";
    case Parameter::AlphaMaxForest: return "ALPHA_MAX_F";
  }
  return "?";
}

struct BoundChain {
  int slater = 0;
  int annihilation = 0;
  int n0 = 0;
  /// Interval [slater, n - annihilation + n0] that contains γ_min over
  /// forest realizations.
  int forest_gamma_low = 0;
  int forest_gamma_high = 0;
};

inline BoundChain bound_chain(const DegreeSequence& d) {
  BoundChain b;
  b.slater = slater(d);
  b.annihilation = annihilation(d);
  b.n0 = d.count_eq(0);
  b.forest_gamma_low = b.slater;
  b.forest_gamma_high = d.n() - b.annihilation + b.n0;
  return b;
}

struct ExtremalResult {
  Parameter parameter = Parameter::OmegaMax;
  int value = 0;
  /// Split index of the witness (positions 0..k-1 form D).
  std::optional<int> achieving_k;
  /// For the domination parameters the witness realizes the positive part of
  /// the sequence; `isolated` zero-degree vertices are added to its
  /// dominating set to obtain `value`.
  std::optional<RealizationWitness> witness;
  int isolated = 0;
  BoundChain bounds;
  std::vector<std::string> warnings;
};

/// Largest clique number over all realizations, by Rao's reduction.
inline ExtremalResult omega_max(const DegreeSequence& d) {
  if (!is_graphic(d)) fail(ErrorKind::NotGraphic, "degree sequence is not graphic");
  ExtremalResult res;
  res.parameter = Parameter::OmegaMax;
  res.bounds = bound_chain(d);
  for (int k = d.n(); k >= 1; --k) {
    auto rest = detail::rao_reduce(d.entries(), k, nullptr);
    if (rest && detail::is_graphic_values(*rest)) {
      res.value = k;
      res.achieving_k = k;
      res.witness = RealizationWitness::make(rao_clique_realize(d, k), d, k, {});
      return res;
    }
  }
  fail(ErrorKind::InternalError, "no clique size passed Rao's test");
}

/// Largest independence number over all realizations: ω_max of the
/// complementary sequence (n-1-d_n, ..., n-1-d_1).
inline ExtremalResult alpha_max(const DegreeSequence& d) {
  if (!is_graphic(d)) fail(ErrorKind::NotGraphic, "degree sequence is not graphic");
  const int n = d.n();
  std::vector<int> co(n);
  for (int i = 0; i < n; ++i) co[i] = n - 1 - d[n - 1 - i];
  const auto cd = DegreeSequence::normalize(co);
  const auto omega = omega_max(cd);

  ExtremalResult res;
  res.parameter = Parameter::AlphaMax;
  res.value = omega.value;
  res.bounds = bound_chain(d);
  // Complement position i is position n-1-i of d; the clique on the top of
  // the complement becomes an independent set on the bottom of d.
  const Graph coclique = omega.witness->graph().complement();
  Graph g(n);
  for (auto [u, v] : coclique.edges()) g.add_edge(n - 1 - u, n - 1 - v);
  res.achieving_k = n - res.value;
  res.witness = RealizationWitness::make(std::move(g), d, n - res.value, {Claim::DBarIndependent});
  return res;
}

namespace detail {

/// Non-increasing profiles p with 1 <= p_i <= min(cap_i, p_{i-1}), grouped by
/// sum. Profiles whose residual (cap_i - p_i) is not graphic are skipped.
inline std::map<std::int64_t, std::vector<std::vector<int>>> cross_profiles(const std::vector<int>& caps) {
  std::map<std::int64_t, std::vector<std::vector<int>>> out;
  const int len = static_cast<int>(caps.size());
  std::vector<int> cur(len);
  std::vector<int> residual(len);
  std::function<void(int, int, std::int64_t)> rec = [&](int i, int prev, std::int64_t sum) {
    if (i == len) {
      for (int j = 0; j < len; ++j) residual[j] = caps[j] - cur[j];
      if (is_graphic_values(residual)) out[sum].push_back(cur);
      return;
    }
    for (int v = std::min(caps[i], prev); v >= 1; --v) {
      cur[i] = v;
      rec(i + 1, v, sum + v);
    }
  };
  if (len > 0) rec(0, caps[0], 0);
  return out;
}

}  // namespace detail

/// Smallest domination number over all realizations.
///
/// Scans k upward from the Slater bound. A split with D = {u_1..u_k} is
/// feasible when some non-increasing positive cross-degree profiles on D and
/// D̄ leave graphic residuals on both sides and are realizable as a bipartite
/// graph between them. Isolated vertices are handled separately and each adds
/// one to the value.
inline ExtremalResult gamma_min_bounded(const DegreeSequence& d, std::optional<int> delta_cap = std::nullopt) {
  if (!is_graphic(d)) fail(ErrorKind::NotGraphic, "degree sequence is not graphic");
  if (delta_cap && d.max_degree() > *delta_cap) {
    fail(ErrorKind::PreconditionViolated, "maximum degree " + std::to_string(d.max_degree()) +
                                              " exceeds the cap " + std::to_string(*delta_cap));
  }
  ExtremalResult res;
  res.parameter = Parameter::GammaMin;
  res.bounds = bound_chain(d);
  res.isolated = d.count_eq(0);
  if (d.max_degree() > 4 && d.n() >= 40) {
    res.warnings.push_back("maximum degree " + std::to_string(d.max_degree()) + " with n=" +
                           std::to_string(d.n()) + ": profile enumeration grows like n^(2*Delta)");
  }
  const int p = d.n() - res.isolated;
  if (p == 0) {
    res.value = d.n();
    return res;
  }
  const auto pos = d.positive_part();
  const auto& e = pos.entries();
  for (int k = slater(pos); k <= p; ++k) {
    if (k == p) {
      // D̄ empty: every realization works.
      res.value = k + res.isolated;
      res.achieving_k = k;
      res.witness = RealizationWitness::make(havel_hakimi_realize(pos), pos, k, {Claim::DDominating});
      return res;
    }
    std::vector<int> top(e.begin(), e.begin() + k);
    std::vector<int> bottom(e.begin() + k, e.end());
    const auto left = detail::cross_profiles(top);
    const auto right = detail::cross_profiles(bottom);
    for (const auto& [sum, lefts] : left) {
      auto it = right.find(sum);
      if (it == right.end()) continue;
      for (const auto& lp : lefts) {
        for (const auto& rp : it->second) {
          if (!gale_ryser_feasible(BipartiteDegreeSpec::exact(lp, rp))) continue;
          Graph g = build_bounded_bipartite(BipartiteDegreeSpec::exact(lp, rp));
          std::vector<int> rt(k), rb(p - k);
          for (int i = 0; i < k; ++i) rt[i] = e[i] - lp[i];
          for (int i = 0; i < p - k; ++i) rb[i] = e[k + i] - rp[i];
          for (auto [u, v] : detail::havel_hakimi_positional(rt).edges()) g.add_edge(u, v);
          for (auto [u, v] : detail::havel_hakimi_positional(rb).edges()) g.add_edge(u + k, v + k);
          std::vector<Claim> claims{Claim::DDominating, Claim::DBarDominating};
          res.value = k + res.isolated;
          res.achieving_k = k;
          res.witness = RealizationWitness::make(std::move(g), pos, k, std::move(claims));
          return res;
        }
      }
    }
  }
  fail(ErrorKind::InternalError, "no split size admitted a realization");
}

namespace detail {

/// min{k : Σ_{i<k} d_i >= Σ_{i>=k} d_i} on a positive sequence.
inline int forest_k1(const DegreeSequence& d) {
  for (int k = 1; k <= d.n(); ++k) {
    if (d.prefix(k) >= d.suffix(k)) return k;
  }
  return d.n();
}

/// Smallest k for which D = {u_1..u_k} can be an independent dominating set
/// of a forest realization; empty when no k qualifies.
inline std::optional<int> forest_k2(const DegreeSequence& d) {
  const int n = d.n();
  for (int k = 1; k <= n; ++k) {
    const std::int64_t top = d.prefix(k);
    const std::int64_t surplus = d.suffix(k) - top;
    const std::int64_t slack = std::max<std::int64_t>(0, 2 * (d.count_ge(2) - k) - 2);
    if (top >= n - k && surplus >= 0 && surplus <= slack) return k;
  }
  return std::nullopt;
}

}  // namespace detail

/// Smallest domination number over forest realizations:
/// min{k1, k2} on the positive part plus the number of isolated vertices.
inline ExtremalResult gamma_min_forest(const DegreeSequence& d) {
  if (!is_forest_sequence(d)) fail(ErrorKind::NotForestSequence, "no forest has this degree sequence");
  ExtremalResult res;
  res.parameter = Parameter::GammaMinForest;
  res.bounds = bound_chain(d);
  res.isolated = d.count_eq(0);
  if (res.isolated == d.n()) {
    res.value = d.n();
    return res;
  }
  const auto pos = d.positive_part();
  const int k1 = detail::forest_k1(pos);
  const auto k2 = detail::forest_k2(pos);
  if (k2 && *k2 < k1) {
    res.achieving_k = *k2;
    res.witness = lemma2_construct_independent_dominating(pos, *k2);
  } else {
    res.achieving_k = k1;
    res.witness = lemma1_construct(pos, k1);
  }
  res.value = *res.achieving_k + res.isolated;
  return res;
}

/// Closed form n_{>=2} + (n_1 - Σ_{i <= n_{>=2}} d_i)/2, valid when there are
/// at least as many leaves as the degree sum of the non-leaves.
inline ExtremalResult gamma_min_forest_fastpath(const DegreeSequence& d) {
  if (d.count_eq(0) > 0) fail(ErrorKind::PreconditionViolated, "sequence has zero entries");
  if (!is_forest_sequence(d)) fail(ErrorKind::NotForestSequence, "no forest has this degree sequence");
  const int big = d.count_ge(2);
  const std::int64_t big_sum = d.prefix(big);
  const int leaves = d.count_eq(1);
  if (leaves < big_sum) {
    fail(ErrorKind::PreconditionViolated, "n_1=" + std::to_string(leaves) +
                                              " is below the degree sum " + std::to_string(big_sum) +
                                              " of the non-leaf entries");
  }
  ExtremalResult res;
  res.parameter = Parameter::GammaMinForest;
  res.bounds = bound_chain(d);
  res.value = big + static_cast<int>((leaves - big_sum) / 2);
  return res;
}

/// Largest independence number over forest realizations, equal to the
/// annihilation number.
inline ExtremalResult alpha_max_forest(const DegreeSequence& d) {
  if (!is_forest_sequence(d)) fail(ErrorKind::NotForestSequence, "no forest has this degree sequence");
  ExtremalResult res;
  res.parameter = Parameter::AlphaMaxForest;
  res.bounds = bound_chain(d);
  res.value = res.bounds.annihilation;
  const int n0 = d.count_eq(0);
  const int p = d.n() - n0;
  res.achieving_k = d.n() - res.value;
  if (p == 0) {
    res.witness = RealizationWitness::make(Graph(d.n()), d, 0, {Claim::IsForest, Claim::DBarIndependent});
    return res;
  }
  const auto pos = d.positive_part();
  const auto core = lemma1_construct(pos, detail::forest_k1(pos));
  Graph g(d.n());
  for (auto [u, v] : core.graph().edges()) g.add_edge(u, v);
  std::vector<Claim> claims{Claim::IsForest, Claim::DBarIndependent};
  if (n0 == 0) claims.push_back(Claim::DDominating);
  res.witness = RealizationWitness::make(std::move(g), d, core.split_k(), std::move(claims));
  return res;
}

struct Theorem4Report {
  bool holds = false;
  int gamma = 0;
  int slater = 0;
  int cycle_excess = 0;
  int bound = 0;
};

/// Checks γ(G) <= 3 sℓ(d(G)) + 2k - 2 for a connected graph with n-1+k edges.
inline Theorem4Report check_theorem4(const Graph& g, const SolverOptions& opts = {}) {
  if (g.n() == 0) fail(ErrorKind::PreconditionViolated, "graph has no vertices");
  if (!g.is_connected()) fail(ErrorKind::NotConnected, "graph is not connected");
  Theorem4Report r;
  r.gamma = domination_number(g, opts).value;
  r.slater = slater(degree_sequence(g));
  r.cycle_excess = g.edge_count() - (g.n() - 1);
  r.bound = 3 * r.slater + 2 * r.cycle_excess - 2;
  r.holds = r.gamma <= r.bound;
  return r;
}

}  // namespace degseq
