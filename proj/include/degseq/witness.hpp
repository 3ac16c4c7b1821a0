#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "degseq/error.hpp"
#include "degseq/graph.hpp"
#include "degseq/sequence.hpp"

namespace degseq {

/// Structural claims a realization can certify about the split
/// D = {u_1..u_k}, D̄ = {u_{k+1}..u_n}.
enum class Claim {
  DDominating,
  DBarDominating,
  DIndependent,
  DBarIndependent,
  IsForest,
};

inline constexpr Claim kAllClaims[] = {Claim::DDominating, Claim::DBarDominating,
                                       Claim::DIndependent, Claim::DBarIndependent,
                                       Claim::IsForest};

inline std::string_view to_string(Claim c) {
  switch (c) {
    case Claim::DDominating: return "D_DOMINATING";
    case Claim::DBarDominating: return "DBAR_DOMINATING";
    case Claim::DIndependent: return "D_INDEPENDENT";
    case Claim::DBarIndependent: return "DBAR_INDEPENDENT";
    case Claim::IsForest: return "IS_FOREST";
  }
  return "?";
}

inline std::optional<Claim> claim_from_string(std::string_view s) {
  for (Claim c : kAllClaims) {
    if (to_string(c) == s) return c;
  }
  return std::nullopt;
}

struct ClaimCheck {
  Claim claim;
  bool holds;
};

struct WitnessReport {
  bool degrees_match = false;
  std::vector<ClaimCheck> checks;

  bool ok() const {
    return degrees_match &&
           std::all_of(checks.begin(), checks.end(), [](const ClaimCheck& c) { return c.holds; });
  }
};

namespace detail {

/// Every vertex of [lo, hi) has a neighbor in [from_lo, from_hi).
inline bool range_dominates(const Graph& g, int from_lo, int from_hi, int lo, int hi) {
  for (int v = lo; v < hi; ++v) {
    const auto& nb = g.neighbors(v);
    bool hit = std::any_of(nb.begin(), nb.end(), [&](int w) { return w >= from_lo && w < from_hi; });
    if (!hit) return false;
  }
  return true;
}

inline bool range_independent(const Graph& g, int lo, int hi) {
  for (int v = lo; v < hi; ++v) {
    for (int w : g.neighbors(v)) {
      if (w >= lo && w < hi) return false;
    }
  }
  return true;
}

inline bool check_claim(const Graph& g, int k, Claim c) {
  const int n = g.n();
  switch (c) {
    case Claim::DDominating: return range_dominates(g, 0, k, k, n);
    case Claim::DBarDominating: return range_dominates(g, k, n, 0, k);
    case Claim::DIndependent: return range_independent(g, 0, k);
    case Claim::DBarIndependent: return range_independent(g, k, n);
    case Claim::IsForest: return g.is_forest();
  }
  return false;
}

}  // namespace detail

/// Re-checks a candidate realization: positional degrees and every claim.
inline WitnessReport validate_witness(const Graph& g, const DegreeSequence& d, int k,
                                      const std::vector<Claim>& claims) {
  WitnessReport report;
  report.degrees_match = g.n() == d.n() && g.degrees() == d.entries();
  const bool k_ok = k >= 0 && k <= g.n();
  for (Claim c : claims) {
    report.checks.push_back({c, k_ok && detail::check_claim(g, k, c)});
  }
  return report;
}

/// A realization together with the claims it certifies. Instances can only be
/// created through `make`, which validates every claim.
class RealizationWitness {
 public:
  static RealizationWitness make(Graph graph, DegreeSequence sequence, int split_k,
                                 std::vector<Claim> claims) {
    auto report = validate_witness(graph, sequence, split_k, claims);
    if (!report.ok()) {
      std::string msg = "witness failed validation (k=" + std::to_string(split_k) + "):";
      if (!report.degrees_match) msg += " degrees";
      for (const auto& c : report.checks) {
        if (!c.holds) msg += " " + std::string(to_string(c.claim));
      }
      fail(ErrorKind::InternalError, msg);
    }
    RealizationWitness w;
    w.graph_ = std::move(graph);
    w.sequence_ = std::move(sequence);
    w.split_k_ = split_k;
    w.claims_ = std::move(claims);
    return w;
  }

  const Graph& graph() const noexcept { return graph_; }
  const DegreeSequence& sequence() const noexcept { return sequence_; }
  int split_k() const noexcept { return split_k_; }
  const std::vector<Claim>& claims() const noexcept { return claims_; }

  bool has_claim(Claim c) const {
    return std::find(claims_.begin(), claims_.end(), c) != claims_.end();
  }

 private:
  RealizationWitness() = default;

  Graph graph_;
  DegreeSequence sequence_;
  int split_k_ = 0;
  std::vector<Claim> claims_;
};

inline WitnessReport validate_witness(const RealizationWitness& w) {
  return validate_witness(w.graph(), w.sequence(), w.split_k(), w.claims());
}

}  // namespace degseq
