// Acceptance run: one PASS/FAIL line per criterion. All tolerances are exact.
// Usage: acceptance [AC1 AC2 ...]   (no arguments runs every criterion)

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "degseq/degseq.hpp"
#include "degseq/sweep.hpp"
#include "naive.hpp"

using degseq::DegreeSequence;
using degseq::Graph;
using degseq::RealizationClass;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::string first_failure;

  void fail(const std::string& what) {
    if (pass) first_failure = what;
    pass = false;
  }
};

std::string show(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

// 1: general extrema against the exhaustive oracle, 1 <= n <= 7.
Outcome ac1() {
  Outcome o;
  long sequences = 0, mismatches = 0;
  for (int n = 1; n <= 7; ++n) {
    degseq::for_each_nonincreasing(n, 0, n - 1, [&](const std::vector<int>& v) {
      auto d = DegreeSequence::normalize(v);
      if (!degseq::is_graphic(d)) return;
      ++sequences;
      auto truth = degseq::oracle_extrema(d, RealizationClass::General);
      const int got[3] = {degseq::gamma_min_bounded(d).value, degseq::alpha_max(d).value, degseq::omega_max(d).value};
      const int want[3] = {*truth.gamma_min, *truth.alpha_max, *truth.omega_max};
      const char* names[3] = {"GAMMA_MIN", "ALPHA_MAX", "OMEGA_MAX"};
      for (int p = 0; p < 3; ++p) {
        if (got[p] != want[p]) {
          ++mismatches;
          o.fail(show(v) + " " + names[p] + " " + std::to_string(got[p]) + " vs " + std::to_string(want[p]));
        }
      }
    });
  }
  o.detail = std::to_string(sequences) + " graphic sequences x 3 parameters, " + std::to_string(mismatches) +
             " mismatches";
  return o;
}

template <class F>
void for_each_positive_forest_sequence(int n_lo, int n_hi, F&& fn) {
  for (int n = n_lo; n <= n_hi; ++n) {
    degseq::for_each_nonincreasing(n, 1, n - 1, [&](const std::vector<int>& v) {
      auto d = DegreeSequence::normalize(v);
      if (degseq::is_forest_sequence(d)) fn(v, d);
    });
  }
}

// 2: forest extrema against the exhaustive forest oracle, 2 <= n <= 9.
Outcome ac2() {
  Outcome o;
  long sequences = 0, mismatches = 0;
  for_each_positive_forest_sequence(2, 9, [&](const std::vector<int>& v, const DegreeSequence& d) {
    ++sequences;
    auto truth = degseq::oracle_extrema(d, RealizationClass::Forest);
    const int g = degseq::gamma_min_forest(d).value;
    const int a = degseq::alpha_max_forest(d).value;
    if (g != *truth.gamma_min) {
      ++mismatches;
      o.fail(show(v) + " GAMMA_MIN_F " + std::to_string(g) + " vs " + std::to_string(*truth.gamma_min));
    }
    if (a != *truth.alpha_max) {
      ++mismatches;
      o.fail(show(v) + " ALPHA_MAX_F " + std::to_string(a) + " vs " + std::to_string(*truth.alpha_max));
    }
  });
  o.detail = std::to_string(sequences) + " forest sequences x 2 parameters, " + std::to_string(mismatches) +
             " mismatches";
  return o;
}

// 3: witness soundness for every sequence of criterion 2.
Outcome ac3() {
  Outcome o;
  long witnesses = 0, bad = 0;
  for_each_positive_forest_sequence(2, 9, [&](const std::vector<int>& v, const DegreeSequence& d) {
    const int n = d.n();
    auto check = [&](const degseq::ExtremalResult& r, const char* name) {
      ++witnesses;
      std::string why;
      if (!r.witness) {
        why = "missing witness";
      } else {
        const auto& w = *r.witness;
        const Graph& g = w.graph();
        if (!degseq::validate_witness(w).ok()) why = "claims fail validation";
        if (!w.has_claim(degseq::Claim::IsForest) || !g.is_forest()) why = "not a certified forest";
        if (r.parameter == degseq::Parameter::GammaMinForest) {
          // D = {u_1..u_k} dominates, so it is a dominating set of the reported size.
          if (!w.has_claim(degseq::Claim::DDominating) || w.split_k() != r.value) why = "dominating set size";
          if (degseq::domination_number(g).value != r.value) why = "witness domination number";
        } else {
          // D̄ = {u_{k+1}..u_n} is independent and has the reported size.
          if (!w.has_claim(degseq::Claim::DBarIndependent) || n - w.split_k() != r.value) why = "independent set size";
          if (degseq::independence_number(g).value != r.value) why = "witness independence number";
        }
      }
      if (!why.empty()) {
        ++bad;
        o.fail(show(v) + " " + name + ": " + why);
      }
    };
    check(degseq::gamma_min_forest(d), "GAMMA_MIN_F");
    check(degseq::alpha_max_forest(d), "ALPHA_MAX_F");
  });
  o.detail = std::to_string(witnesses) + " witnesses, " + std::to_string(bad) + " unsound";
  return o;
}

// 4: r+1 stars K_{1,r} versus K_{r+1} plus r(r+1)/2 disjoint edges.
Outcome ac4() {
  Outcome o;
  std::ostringstream detail;
  for (int r = 2; r <= 4; ++r) {
    std::vector<int> v(r + 1, r);
    v.insert(v.end(), r * (r + 1), 1);
    auto d = DegreeSequence::normalize(v);
    const int pairs = r * (r + 1) / 2;
    Graph g2 = degseq::complete_graph(r + 1).disjoint_union(Graph(2 * pairs));
    for (int i = 0; i < pairs; ++i) g2.add_edge(r + 1 + 2 * i, r + 2 + 2 * i);
    Graph g1(0);
    for (int s = 0; s <= r; ++s) g1 = g1.disjoint_union(degseq::star_graph(r));

    const int sl = degseq::slater(d);
    const int gmin = degseq::gamma_min_bounded(d).value;
    const int gamma1 = degseq::domination_number(g1).value;
    const int gamma2 = degseq::domination_number(g2).value;
    const bool same_degrees = degseq::degree_sequence(g1) == d && degseq::degree_sequence(g2) == d;
    if (!same_degrees) o.fail("r=" + std::to_string(r) + ": G_1 or G_2 does not realize d");
    if (sl != r + 1 || gmin != r + 1 || gamma1 != r + 1) {
      o.fail("r=" + std::to_string(r) + ": sl=" + std::to_string(sl) + " gamma_min=" + std::to_string(gmin) +
             " gamma(G_1)=" + std::to_string(gamma1));
    }
    if (gamma2 != 1 + pairs) o.fail("r=" + std::to_string(r) + ": gamma(G_2)=" + std::to_string(gamma2));
    detail << (r > 2 ? "; " : "") << "r=" << r << " sl=" << sl << " gamma_min=" << gmin << " gamma(G_2)=" << gamma2;
  }
  o.detail = detail.str();
  return o;
}

// 5: under n_1 >= sum of the non-leaf degrees, four quantities coincide.
Outcome ac5() {
  Outcome o;
  long hits = 0, bad = 0;
  for_each_positive_forest_sequence(2, 9, [&](const std::vector<int>& v, const DegreeSequence& d) {
    if (d.count_eq(1) < d.prefix(d.count_ge(2))) return;
    ++hits;
    const int fast = degseq::gamma_min_forest_fastpath(d).value;
    const int exact = degseq::gamma_min_forest(d).value;
    const int sl = degseq::slater(d);
    const int na = d.n() - degseq::annihilation(d);
    if (!(fast == exact && exact == sl && sl == na)) {
      ++bad;
      o.fail(show(v) + " fast=" + std::to_string(fast) + " exact=" + std::to_string(exact) +
             " sl=" + std::to_string(sl) + " n-a=" + std::to_string(na));
    }
  });
  o.detail = std::to_string(hits) + " sequences satisfy the hypothesis, " + std::to_string(bad) + " disagree";
  if (hits == 0) o.fail("no sequence satisfied the hypothesis");
  return o;
}

// 6: sl <= gamma_min^F <= n - a + n_0 for all forest sequences, zeros allowed.
Outcome ac6() {
  Outcome o;
  long sequences = 0, bad = 0;
  for (int n = 1; n <= 9; ++n) {
    degseq::for_each_nonincreasing(n, 0, n - 1, [&](const std::vector<int>& v) {
      auto d = DegreeSequence::normalize(v);
      if (!degseq::is_forest_sequence(d)) return;
      ++sequences;
      const int low = degseq::slater(d);
      const int high = n - degseq::annihilation(d) + d.count_eq(0);
      const int g = degseq::gamma_min_forest(d).value;
      if (!(low <= g && g <= high)) {
        ++bad;
        o.fail(show(v) + " chain " + std::to_string(low) + " <= " + std::to_string(g) + " <= " + std::to_string(high));
      }
    });
  }
  o.detail = std::to_string(sequences) + " forest sequences, " + std::to_string(bad) + " chain violations";
  return o;
}

// 7: the domination bound for connected graphs with cycle excess 0..4.
Outcome ac7() {
  Outcome o;
  std::mt19937 rng(2024);
  long violations = 0;
  int per_excess[5] = {0, 0, 0, 0, 0};
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const int max_excess = std::min(4, n * (n - 1) / 2 - (n - 1));
    const int k = static_cast<int>(rng() % (max_excess + 1));
    Graph g = naive::random_connected(n, k, rng);
    auto r = degseq::check_theorem4(g);
    ++per_excess[r.cycle_excess];
    if (r.cycle_excess != k) o.fail("generator produced the wrong cycle excess");
    if (!r.holds) {
      ++violations;
      o.fail("n=" + std::to_string(n) + " gamma=" + std::to_string(r.gamma) + " bound=" + std::to_string(r.bound));
    }
  }
  std::ostringstream detail;
  detail << "1000 connected graphs (excess 0..4: " << per_excess[0] << "/" << per_excess[1] << "/" << per_excess[2]
         << "/" << per_excess[3] << "/" << per_excess[4] << "), " << violations << " violations";
  o.detail = detail.str();
  return o;
}

// 8: Gale–Ryser feasibility against brute force, every spec with m + n <= 7
// and all bounds in [0, 3]; every construction is audited.
Outcome ac8() {
  Outcome o;
  struct Window {
    int lo, hi;
  };
  std::vector<Window> windows;
  for (int lo = 0; lo <= 3; ++lo)
    for (int hi = lo; hi <= 3; ++hi) windows.push_back({lo, hi});
  const int W = static_cast<int>(windows.size());

  long specs = 0, feasible = 0, disagreements = 0, audit_failures = 0;
  for (int total = 2; total <= 7; ++total) {
    for (int m = 1; m < total; ++m) {
      const int n = total - m;
      // Achievable degree vectors (all entries <= 3) from every bipartite graph.
      std::vector<char> table(1);
      std::size_t points = 1;
      for (int v = 0; v < total; ++v) points *= 4;
      table.assign(points, 0);
      const int cells = m * n;
      for (std::uint32_t s = 0; s < (1u << cells); ++s) {
        std::size_t idx = 0;
        bool fits = true;
        for (int v = 0; v < total && fits; ++v) {
          int deg = 0;
          if (v < m) {
            for (int j = 0; j < n; ++j) deg += s >> (v * n + j) & 1;
          } else {
            for (int i = 0; i < m; ++i) deg += s >> (i * n + (v - m)) & 1;
          }
          fits = deg <= 3;
          idx = idx * 4 + deg;
        }
        if (fits) table[idx] = 1;
      }
      // Replace each value axis by a window axis: OR over the values it covers.
      std::vector<int> radix(total, 4);
      for (int axis = 0; axis < total; ++axis) {
        std::size_t inner = 1;
        for (int v = axis + 1; v < total; ++v) inner *= radix[v];
        std::size_t outer = table.size() / (inner * 4);
        std::vector<char> next(outer * W * inner, 0);
        for (std::size_t a = 0; a < outer; ++a)
          for (int w = 0; w < W; ++w)
            for (std::size_t b = 0; b < inner; ++b) {
              char any = 0;
              for (int x = windows[w].lo; x <= windows[w].hi && !any; ++x) any = table[(a * 4 + x) * inner + b];
              next[(a * W + w) * inner + b] = any;
            }
        table.swap(next);
        radix[axis] = W;
      }
      // Every spec: index digits are window choices, vertex 0 most significant.
      std::vector<int> a(m), b(m), ap(n), bp(n);
      for (std::size_t idx = 0; idx < table.size(); ++idx) {
        std::size_t rest = idx;
        for (int v = total - 1; v >= 0; --v) {
          const Window& win = windows[rest % W];
          rest /= W;
          if (v < m) {
            a[v] = win.lo;
            b[v] = win.hi;
          } else {
            ap[v - m] = win.lo;
            bp[v - m] = win.hi;
          }
        }
        ++specs;
        if (idx % 997 == 0 && naive::bipartite_exists(a, b, ap, bp) != (table[idx] != 0)) {
          o.fail("brute-force table disagrees with direct enumeration");
        }
        degseq::BipartiteDegreeSpec spec(a, b, ap, bp);
        const bool got = degseq::gale_ryser_feasible(spec);
        const bool want = table[idx] != 0;
        if (got != want) {
          ++disagreements;
          o.fail("m=" + std::to_string(m) + " n=" + std::to_string(n) + " a=" + show(a) + " b=" + show(b) +
                 " a'=" + show(ap) + " b'=" + show(bp) + " feasible=" + (got ? "true" : "false"));
        }
        if (got) {
          ++feasible;
          if (!degseq::audit_bipartite(degseq::build_bounded_bipartite(spec), spec)) {
            ++audit_failures;
            o.fail("audit failed for m=" + std::to_string(m) + " a=" + show(a));
          }
        }
      }
    }
  }
  o.detail = std::to_string(specs) + " specs (" + std::to_string(feasible) + " feasible, all built), " +
             std::to_string(disagreements) + " disagreements, " + std::to_string(audit_failures) + " audit failures";
  return o;
}

// 9: gamma >= sl and alpha <= a on random graphs with n <= 16.
Outcome ac9() {
  Outcome o;
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  long violations = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 16);
    Graph g = naive::random_graph(n, density(rng), rng);
    auto d = degseq::degree_sequence(g);
    const int gamma = degseq::domination_number(g).value;
    const int alpha = degseq::independence_number(g).value;
    if (gamma < degseq::slater(d) || alpha > degseq::annihilation(d)) {
      ++violations;
      o.fail(show(d.entries()) + " gamma=" + std::to_string(gamma) + " alpha=" + std::to_string(alpha));
    }
  }
  o.detail = "10000 random graphs, " + std::to_string(violations) + " violations";
  return o;
}

struct Criterion {
  const char* id;
  const char* title;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {"AC1", "general oracle equivalence, n<=7", ac1},
      {"AC2", "forest oracle equivalence, 2<=n<=9", ac2},
      {"AC3", "forest witness soundness", ac3},
      {"AC4", "star/clique family, r in {2,3,4}", ac4},
      {"AC5", "leaf-rich closed formula coherence, n<=9", ac5},
      {"AC6", "forest domination chain with zeros, n<=9", ac6},
      {"AC7", "connected-graph domination bound", ac7},
      {"AC8", "bounded Gale-Ryser, m+n<=7, bounds<=3", ac8},
      {"AC9", "Slater and annihilation bounds, n<=16", ac9},
  };
  std::set<std::string> wanted(argv + 1, argv + argc);
  int failures = 0;
  for (const auto& c : all) {
    if (!wanted.empty() && !wanted.count(c.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %s | %s | tolerance: exact | %s | %.1fs\n", c.id, out.pass ? "PASS" : "FAIL", c.title,
                out.detail.c_str(), secs);
    if (!out.pass) {
      std::printf("    first failure: %s\n", out.first_failure.c_str());
      ++failures;
    }
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
