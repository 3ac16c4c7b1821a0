#pragma once

#include <functional>
#include <string>
#include <vector>

#include "degseq/error.hpp"
#include "degseq/extremal.hpp"
#include "degseq/oracle.hpp"
#include "degseq/sequence.hpp"

namespace degseq {

/// Calls fn for every non-increasing sequence of length n with entries in
/// [min_entry, max_entry], in lexicographically decreasing order.
inline void for_each_nonincreasing(int n, int min_entry, int max_entry,
                                   const std::function<void(const std::vector<int>&)>& fn) {
  if (n <= 0 || max_entry < min_entry) return;
  std::vector<int> cur(n);
  std::function<void(int, int)> rec = [&](int i, int cap) {
    if (i == n) {
      fn(cur);
      return;
    }
    for (int v = cap; v >= min_entry; --v) {
      cur[i] = v;
      rec(i + 1, v);
    }
  };
  rec(0, max_entry);
}

struct SweepOptions {
  int n_min = 1;
  int n_max = 6;
  RealizationClass realization_class = RealizationClass::General;
  std::vector<Parameter> parameters;
  /// Forest sweeps skip sequences with zero entries unless set.
  bool allow_zeros = false;
  OracleOptions oracle;
};

struct SweepMismatch {
  std::vector<int> sequence;
  Parameter parameter;
  int computed = 0;
  int expected = 0;
};

struct SweepRow {
  int n = 0;
  int sequences = 0;
  int mismatches = 0;
};

struct SweepSummary {
  std::vector<SweepRow> rows;
  std::vector<SweepMismatch> mismatches;
};

inline std::vector<Parameter> default_sweep_parameters(RealizationClass cls) {
  if (cls == RealizationClass::General) return {Parameter::GammaMin, Parameter::AlphaMax, Parameter::OmegaMax};
  return {Parameter::GammaMinForest, Parameter::AlphaMaxForest};
}

/// Compares every algorithmic extremum against the exhaustive oracle over
/// all qualifying sequences with n_min <= n <= n_max.
inline SweepSummary run_sweep(const SweepOptions& opts) {
  const bool general = opts.realization_class == RealizationClass::General;
  const int limit = general ? opts.oracle.general_limit : opts.oracle.forest_limit;
  if (opts.n_max > limit) {
    fail(ErrorKind::TooLarge, "n_max=" + std::to_string(opts.n_max) + " exceeds the oracle limit " +
                                  std::to_string(limit));
  }
  auto params = opts.parameters.empty() ? default_sweep_parameters(opts.realization_class) : opts.parameters;
  for (Parameter p : params) {
    const bool forest_param = p == Parameter::GammaMinForest || p == Parameter::AlphaMaxForest;
    if (forest_param == general) {
      fail(ErrorKind::PreconditionViolated, std::string(to_string(p)) + " does not belong to a " +
                                                std::string(to_string(opts.realization_class)) + " sweep");
    }
  }
  SweepSummary summary;
  for (int n = std::max(1, opts.n_min); n <= opts.n_max; ++n) {
    SweepRow row;
    row.n = n;
    const int min_entry = (!general && !opts.allow_zeros) ? 1 : 0;
    for_each_nonincreasing(n, min_entry, n - 1, [&](const std::vector<int>& raw) {
      const auto d = DegreeSequence::normalize(raw);
      if (general ? !is_graphic(d) : !is_forest_sequence(d)) return;
      ++row.sequences;
      const auto truth = oracle_extrema(d, opts.realization_class, opts.oracle);
      for (Parameter p : params) {
        int computed = 0;
        int expected = 0;
        switch (p) {
          case Parameter::GammaMin:
            computed = gamma_min_bounded(d).value;
            expected = *truth.gamma_min;
            break;
          case Parameter::AlphaMax:
            computed = alpha_max(d).value;
            expected = *truth.alpha_max;
            break;
          case Parameter::OmegaMax:
            computed = omega_max(d).value;
            expected = *truth.omega_max;
            break;
          case Parameter::GammaMinForest:
            computed = gamma_min_forest(d).value;
            expected = *truth.gamma_min;
            break;
          case Parameter::AlphaMaxForest:
            computed = alpha_max_forest(d).value;
            expected = *truth.alpha_max;
            break;
        }
        if (computed != expected) {
          ++row.mismatches;
          summary.mismatches.push_back({raw, p, computed, expected});
        }
      }
    });
    summary.rows.push_back(row);
  }
  return summary;
}

}  // namespace degseq
