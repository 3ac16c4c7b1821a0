#pragma once

#include <algorithm>
#include <cassert>
#include <charconv>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "degseq/error.hpp"

namespace degseq {

/// A degree sequence stored in non-increasing order.
///
/// Positions are 0-based and always refer to the sorted order; vertex u_{i+1}
/// in the usual 1-based notation is position i here. `original_order()[i]` is
/// the input position of the entry now stored at position i.
class DegreeSequence {
 public:
  DegreeSequence() = default;

  /// Sorts `raw` non-increasingly (stable, so equal entries keep their input
  /// order). Throws InvalidSequence on empty input or negative entries.
  static DegreeSequence normalize(std::span<const int> raw) {
    if (raw.empty()) fail(ErrorKind::InvalidSequence, "degree sequence is empty");
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (raw[i] < 0) {
        fail(ErrorKind::InvalidSequence,
             "entry " + std::to_string(i + 1) + " is negative");
      }
    }
    DegreeSequence d;
    d.order_.resize(raw.size());
    std::iota(d.order_.begin(), d.order_.end(), 0);
    std::stable_sort(d.order_.begin(), d.order_.end(),
                     [&](int a, int b) { return raw[a] > raw[b]; });
    d.entries_.reserve(raw.size());
    for (int idx : d.order_) d.entries_.push_back(raw[idx]);
    d.build_stats();
    return d;
  }

  static DegreeSequence normalize(std::initializer_list<int> raw) {
    return normalize(std::span<const int>(raw.begin(), raw.size()));
  }

  int n() const noexcept { return static_cast<int>(entries_.size()); }
  std::int64_t total() const noexcept { return prefix_.back(); }
  const std::vector<int>& entries() const noexcept { return entries_; }
  int operator[](int i) const { return entries_[i]; }
  int max_degree() const noexcept { return entries_.empty() ? 0 : entries_.front(); }

  /// Sum of the first k entries, 0 <= k <= n.
  std::int64_t prefix(int k) const { return prefix_[k]; }
  /// Sum of entries k..n-1 (the last n-k entries).
  std::int64_t suffix(int k) const { return total() - prefix_[k]; }

  /// n_v(d): number of entries equal to v.
  int count_eq(int v) const {
    if (v < 0 || v >= static_cast<int>(count_eq_.size())) return 0;
    return count_eq_[v];
  }
  /// n_{>=v}(d): number of entries at least v.
  int count_ge(int v) const {
    if (v <= 0) return n();
    if (v >= static_cast<int>(count_ge_.size())) return 0;
    return count_ge_[v];
  }

  const std::vector<int>& original_order() const noexcept { return order_; }

  /// Reconstructs the raw input from the stored entries and permutation.
  std::vector<int> raw() const {
    std::vector<int> out(entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i) out[order_[i]] = entries_[i];
    return out;
  }

  /// The leading entries that are positive, i.e. the sequence with its
  /// isolated vertices dropped. Must contain at least one positive entry.
  DegreeSequence positive_part() const {
    const int p = n() - count_eq(0);
    return normalize(std::span<const int>(entries_.data(), p));
  }

  bool operator==(const DegreeSequence& other) const { return entries_ == other.entries_; }

 private:
  void build_stats() {
    prefix_.assign(entries_.size() + 1, 0);
    for (std::size_t i = 0; i < entries_.size(); ++i) prefix_[i + 1] = prefix_[i] + entries_[i];
    const int top = max_degree();
    count_eq_.assign(top + 2, 0);
    for (int e : entries_) ++count_eq_[e];
    count_ge_.assign(top + 2, 0);
    for (int v = top; v >= 0; --v) count_ge_[v] = count_ge_[v + 1] + count_eq_[v];
  }

  std::vector<int> entries_;
  std::vector<std::int64_t> prefix_{0};
  std::vector<int> count_eq_;
  std::vector<int> count_ge_;
  std::vector<int> order_;
};

/// Parses "3,2,2,1" or "3 2 2 1" (commas and whitespace may be mixed).
inline std::vector<int> parse_sequence_text(std::string_view text) {
  std::vector<int> out;
  std::size_t i = 0;
  auto is_sep = [](char c) {
    return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r';
  };
  while (i < text.size()) {
    while (i < text.size() && is_sep(text[i])) ++i;
    if (i == text.size()) break;
    std::size_t j = i;
    while (j < text.size() && !is_sep(text[j])) ++j;
    int value = 0;
    auto token = text.substr(i, j - i);
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      fail(ErrorKind::ParseError, "not an integer: '" + std::string(token) + "'");
    }
    if (value < 0) {
      fail(ErrorKind::InvalidSequence, "negative entry: " + std::string(token));
    }
    out.push_back(value);
    i = j;
  }
  if (out.empty()) fail(ErrorKind::InvalidSequence, "degree sequence is empty");
  return out;
}

inline DegreeSequence parse_sequence(std::string_view text) {
  auto raw = parse_sequence_text(text);
  return DegreeSequence::normalize(raw);
}

namespace detail {

/// Erdős–Gallai on an arbitrary integer vector; negatives and entries >= n
/// make it non-graphic.
inline bool erdos_gallai(std::vector<int> v) {
  const int n = static_cast<int>(v.size());
  std::int64_t total = 0;
  for (int x : v) {
    if (x < 0 || x >= n) return false;
    total += x;
  }
  if (total % 2 != 0) return false;
  std::sort(v.begin(), v.end(), std::greater<>());
  std::vector<std::int64_t> prefix(n + 1, 0);
  for (int i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + v[i];
  // ge = number of entries >= k; shrinks as k grows.
  int ge = n;
  for (int k = 1; k <= n; ++k) {
    while (ge > 0 && v[ge - 1] < k) --ge;
    const int split = std::max(ge, k);
    const std::int64_t rhs = static_cast<std::int64_t>(k) * (k - 1) +
                             static_cast<std::int64_t>(k) * (split - k) +
                             (prefix[n] - prefix[split]);
    if (prefix[k] > rhs) return false;
  }
  return true;
}

/// Iterated Havel–Hakimi reduction on an arbitrary integer vector.
inline bool havel_hakimi(std::vector<int> v) {
  for (int x : v) {
    if (x < 0) return false;
  }
  while (true) {
    std::sort(v.begin(), v.end(), std::greater<>());
    while (!v.empty() && v.back() == 0) v.pop_back();
    if (v.empty()) return true;
    const int head = v.front();
    if (head > static_cast<int>(v.size()) - 1) return false;
    v.erase(v.begin());
    for (int i = 0; i < head; ++i) {
      if (--v[i] < 0) return false;
    }
  }
}

/// Graphicality of an unsorted integer vector (negatives allowed, false).
inline bool is_graphic_values(std::span<const int> values) {
  std::vector<int> v(values.begin(), values.end());
  const bool eg = erdos_gallai(v);
  assert(eg == havel_hakimi(v));
  return eg;
}

}  // namespace detail

inline bool is_graphic_erdos_gallai(const DegreeSequence& d) {
  return detail::erdos_gallai(d.entries());
}

inline bool is_graphic_havel_hakimi(const DegreeSequence& d) {
  return detail::havel_hakimi(d.entries());
}

/// Production graphicality test (Erdős–Gallai), cross-checked against
/// Havel–Hakimi in debug builds.
inline bool is_graphic(const DegreeSequence& d) {
  return detail::is_graphic_values(d.entries());
}

/// True iff some forest realizes d. The all-zero sequence is realized by the
/// edgeless forest.
inline bool is_forest_sequence(const DegreeSequence& d) {
  const int positive = d.n() - d.count_eq(0);
  if (positive == 0) return true;
  return d.total() % 2 == 0 && d.total() <= 2 * static_cast<std::int64_t>(positive) - 2;
}

/// Slater number: least k in [n] whose top-k degree sum reaches n-k.
inline int slater(const DegreeSequence& d) {
  for (int k = 1; k <= d.n(); ++k) {
    if (d.prefix(k) >= d.n() - k) return k;
  }
  return d.n();
}

/// Annihilation number: largest a in [n] whose bottom-a degree sum does not
/// exceed the sum of the remaining entries; 0 when no such a exists.
inline int annihilation(const DegreeSequence& d) {
  for (int a = d.n(); a >= 1; --a) {
    if (d.suffix(d.n() - a) <= d.prefix(d.n() - a)) return a;
  }
  return 0;
}

}  // namespace degseq
