#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "degseq/bipartite.hpp"
#include "degseq/error.hpp"
#include "degseq/extremal.hpp"
#include "degseq/graph.hpp"
#include "degseq/oracle.hpp"
#include "degseq/sequence.hpp"
#include "degseq/witness.hpp"

namespace degseq::io {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// "n m" followed by m lines "i j" with 1-based vertex indices.
inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = -1;
  long long m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) fail(ErrorKind::ParseError, "edge list must start with 'n m'");
  Graph g(static_cast<int>(n));
  for (long long e = 0; e < m; ++e) {
    long long i = 0;
    long long j = 0;
    if (!(in >> i >> j)) fail(ErrorKind::ParseError, "edge list ended after " + std::to_string(e) + " edges");
    if (i < 1 || j < 1 || i > n || j > n) {
      fail(ErrorKind::ParseError, "edge " + std::to_string(e + 1) + " has a vertex outside 1.." + std::to_string(n));
    }
    try {
      g.add_edge(static_cast<int>(i - 1), static_cast<int>(j - 1));
    } catch (const Error& err) {
      fail(ErrorKind::ParseError, err.what());
    }
  }
  std::string trailing;
  if (in >> trailing) fail(ErrorKind::ParseError, "unexpected trailing input: " + trailing);
  return g;
}

inline json edges_to_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u + 1, v + 1});
  return edges;
}

inline json graph_to_json(const Graph& g) {
  return json{{"n", g.n()}, {"edges", edges_to_json(g)}};
}

/// {"n": int, "edges": [[i, j], ...]} with 1-based indices.
inline Graph graph_from_json(const json& j) {
  try {
    const int n = j.at("n").get<int>();
    if (n < 0) fail(ErrorKind::ParseError, "negative vertex count");
    Graph g(n);
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) fail(ErrorKind::ParseError, "each edge must be a pair");
      const int a = e[0].get<int>();
      const int b = e[1].get<int>();
      if (a < 1 || b < 1 || a > n || b > n) fail(ErrorKind::ParseError, "edge vertex outside 1..n");
      g.add_edge(a - 1, b - 1);
    }
    return g;
  } catch (const json::exception& e) {
    fail(ErrorKind::ParseError, std::string("bad graph JSON: ") + e.what());
  } catch (const Error& e) {
    fail(ErrorKind::ParseError, e.what());
  }
}

/// Accepts either the JSON graph object or the edge-list format.
inline Graph parse_graph(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      fail(ErrorKind::ParseError, std::string("bad graph JSON: ") + e.what());
    }
    return graph_from_json(j);
  }
  return parse_edge_list(text);
}

inline json sequence_fields(const DegreeSequence& d) {
  return json{{"sequence", d.entries()}, {"input_order", d.original_order()}};
}

inline json witness_to_json(const RealizationWitness& w) {
  json claims = json::array();
  for (Claim c : w.claims()) claims.push_back(std::string(to_string(c)));
  return json{{"sequence", w.sequence().entries()},
              {"k", w.split_k()},
              {"claims", claims},
              {"edges", edges_to_json(w.graph())}};
}

inline json bound_chain_to_json(const BoundChain& b) {
  return json{{"slater", b.slater},
              {"annihilation", b.annihilation},
              {"n0", b.n0},
              {"corollary4_low", b.forest_gamma_low},
              {"corollary4_high", b.forest_gamma_high}};
}

inline json result_to_json(const ExtremalResult& r, bool with_witness) {
  json j{{"parameter", std::string(to_string(r.parameter))}, {"value", r.value}};
  j["achieving_k"] = r.achieving_k ? json(*r.achieving_k) : json(nullptr);
  j["isolated"] = r.isolated;
  j["bound_chain"] = bound_chain_to_json(r.bounds);
  if (with_witness) j["witness"] = r.witness ? witness_to_json(*r.witness) : json(nullptr);
  return j;
}

inline json oracle_to_json(const OracleReport& r) {
  auto opt = [](const std::optional<int>& v) { return v ? json(*v) : json(nullptr); };
  json j = sequence_fields(r.sequence);
  j["class"] = std::string(to_string(r.realization_class));
  j["realization_count"] = r.realization_count;
  j["gamma_min"] = opt(r.gamma_min);
  j["gamma_max"] = opt(r.gamma_max);
  j["alpha_min"] = opt(r.alpha_min);
  j["alpha_max"] = opt(r.alpha_max);
  j["omega_min"] = opt(r.omega_min);
  j["omega_max"] = opt(r.omega_max);
  return j;
}

/// {"a": [...], "b": [...], "ap": [...], "bp": [...]}
inline BipartiteDegreeSpec spec_from_json(const json& j) {
  try {
    return BipartiteDegreeSpec(j.at("a").get<std::vector<int>>(), j.at("b").get<std::vector<int>>(),
                               j.at("ap").get<std::vector<int>>(), j.at("bp").get<std::vector<int>>());
  } catch (const json::exception& e) {
    fail(ErrorKind::ParseError, std::string("bad bipartite spec JSON: ") + e.what());
  }
}

}  // namespace degseq::io
