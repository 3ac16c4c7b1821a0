// degseq: extremal invariants over the realizations of a degree sequence.
//
// Exit status: 0 success, 1 parse or usage error, 2 precondition or
// infeasibility, 3 internal invariant breach (including sweep mismatches).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "degseq/degseq.hpp"
#include "degseq/io.hpp"
#include "degseq/sweep.hpp"

namespace {

using degseq::io::json;

struct Flags {
  bool json = false;
  bool witness = false;
  bool forest = false;
  bool allow_zeros = false;
  std::string input;
  std::string method;
  std::string graph_file;
  std::optional<int> k;
  std::optional<int> delta_cap;
  std::optional<int> limit;
  int n_min = 1;
  int n_max = 6;
  std::vector<std::string> params;
};

std::string slurp(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

// "-" reads stdin, "@path" reads a file, anything else is the text itself.
std::string read_source(const std::string& arg) {
  if (arg == "-") return slurp(std::cin);
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream f(arg.substr(1));
    if (!f) degseq::fail(degseq::ErrorKind::ParseError, "cannot open " + arg.substr(1));
    return slurp(f);
  }
  return arg;
}

std::string read_file(const std::string& path) {
  if (path == "-") return slurp(std::cin);
  std::ifstream f(path);
  if (!f) degseq::fail(degseq::ErrorKind::ParseError, "cannot open " + path);
  return slurp(f);
}

std::string join(const std::vector<int>& v, int offset = 0) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i] + offset);
  }
  return s;
}

std::string edge_text(const degseq::Graph& g) {
  std::string s;
  for (auto [u, v] : g.edges()) {
    if (!s.empty()) s += ' ';
    s += std::to_string(u + 1) + "-" + std::to_string(v + 1);
  }
  return s;
}

json base(const std::string& command) {
  return json{{"schema_version", degseq::io::kSchemaVersion}, {"command", command}};
}

json with_sequence(json j, const degseq::DegreeSequence& d) {
  j["sequence"] = d.entries();
  std::vector<int> order;
  for (int i : d.original_order()) order.push_back(i + 1);
  j["input_order"] = order;
  return j;
}

void print_sequence_line(const degseq::DegreeSequence& d) {
  std::cout << "sequence=" << join(d.entries()) << " input_order=" << join(d.original_order(), 1) << "\n";
}

void print_witness_text(const degseq::RealizationWitness& w) {
  std::string claims;
  for (auto c : w.claims()) {
    if (!claims.empty()) claims += ',';
    claims += std::string(degseq::to_string(c));
  }
  std::cout << "witness k=" << w.split_k() << " claims=" << (claims.empty() ? "-" : claims) << "\n";
  std::cout << "edges: " << edge_text(w.graph()) << "\n";
}

void print_bounds_text(const degseq::BoundChain& b) {
  std::cout << "bounds: slater=" << b.slater << " annihilation=" << b.annihilation << " n0=" << b.n0
            << " corollary4=[" << b.forest_gamma_low << "," << b.forest_gamma_high << "]\n";
}

void emit_extremal(const std::string& command, const degseq::DegreeSequence& d, const degseq::ExtremalResult& r,
                   const Flags& f) {
  for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";
  if (f.json) {
    json j = with_sequence(base(command), d);
    const json body = degseq::io::result_to_json(r, f.witness);
    for (const auto& [key, value] : body.items()) j[key] = value;
    j["warnings"] = r.warnings;
    std::cout << j.dump() << "\n";
    return;
  }
  std::cout << degseq::to_string(r.parameter) << "=" << r.value;
  if (r.achieving_k) std::cout << " achieving_k=" << *r.achieving_k;
  std::cout << " isolated=" << r.isolated << "\n";
  print_bounds_text(r.bounds);
  if (f.witness && r.witness) print_witness_text(*r.witness);
  print_sequence_line(d);
}

int cmd_check(const Flags& f) {
  const auto d = degseq::parse_sequence(read_source(f.input));
  const bool graphic = degseq::is_graphic(d);
  const bool forest = degseq::is_forest_sequence(d);
  if (f.json) {
    json j = with_sequence(base("check"), d);
    j["graphic"] = graphic;
    j["forest"] = forest;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "graphic=" << (graphic ? "true" : "false") << " forest=" << (forest ? "true" : "false") << "\n";
  }
  return 0;
}

int cmd_bounds(const Flags& f) {
  const auto d = degseq::parse_sequence(read_source(f.input));
  const auto b = degseq::bound_chain(d);
  if (f.json) {
    json j = with_sequence(base("bounds"), d);
    j["bound_chain"] = degseq::io::bound_chain_to_json(b);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "slater=" << b.slater << " annihilation=" << b.annihilation << "\n";
    std::cout << "n0=" << b.n0 << " corollary4=[" << b.forest_gamma_low << "," << b.forest_gamma_high << "]\n";
  }
  return 0;
}

int cmd_realize(const Flags& f) {
  const auto d = degseq::parse_sequence(read_source(f.input));
  const bool split = f.method == "lemma1" || f.method == "lemma2";
  if (split && !f.k) degseq::fail(degseq::ErrorKind::ParseError, "--k is required for " + f.method);
  if (!split && f.k) degseq::fail(degseq::ErrorKind::ParseError, "--k applies only to lemma1 and lemma2");
  std::optional<degseq::RealizationWitness> w;
  degseq::Graph g;
  if (f.method == "hh") {
    g = degseq::havel_hakimi_realize(d);
  } else if (f.method == "forest") {
    g = degseq::forest_realize(d);
  } else if (f.method == "lemma1") {
    w = degseq::lemma1_construct(d, *f.k);
  } else {
    w = degseq::lemma2_construct_independent_dominating(d, *f.k);
  }
  if (w) g = w->graph();
  if (f.json) {
    json j = with_sequence(base("realize"), d);
    j["method"] = f.method;
    j["edges"] = degseq::io::edges_to_json(g);
    j["witness"] = w ? degseq::io::witness_to_json(*w) : json(nullptr);
    std::cout << j.dump() << "\n";
  } else {
    if (w) {
      print_witness_text(*w);
    } else {
      std::cout << "edges: " << edge_text(g) << "\n";
    }
    print_sequence_line(d);
  }
  return 0;
}

degseq::OracleOptions oracle_options(const Flags& f) {
  degseq::OracleOptions o;
  if (const char* env = std::getenv("DEGSEQ_ORACLE_LIMIT"); env && *env) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(env, &used);
      if (used != std::string(env).size() || v < 1) throw std::invalid_argument(env);
      o.general_limit = o.forest_limit = v;
    } catch (const std::exception&) {
      degseq::fail(degseq::ErrorKind::ParseError, std::string("bad DEGSEQ_ORACLE_LIMIT: ") + env);
    }
  }
  if (f.limit) o.general_limit = o.forest_limit = *f.limit;
  return o;
}

int cmd_oracle(const Flags& f) {
  const auto d = degseq::parse_sequence(read_source(f.input));
  const auto cls = f.forest ? degseq::RealizationClass::Forest : degseq::RealizationClass::General;
  const auto r = degseq::oracle_extrema(d, cls, oracle_options(f));
  if (f.json) {
    json j = base("oracle");
    const json body = degseq::io::oracle_to_json(r);
    for (const auto& [key, value] : body.items()) j[key] = value;
    std::vector<int> order;
    for (int i : d.original_order()) order.push_back(i + 1);
    j["input_order"] = order;
    std::cout << j.dump() << "\n";
    return 0;
  }
  auto range = [](const std::optional<int>& lo, const std::optional<int>& hi) {
    return lo ? "[" + std::to_string(*lo) + "," + std::to_string(*hi) + "]" : std::string("none");
  };
  std::cout << "class=" << degseq::to_string(cls) << " realizations=" << r.realization_count << "\n";
  std::cout << "gamma=" << range(r.gamma_min, r.gamma_max) << " alpha=" << range(r.alpha_min, r.alpha_max)
            << " omega=" << range(r.omega_min, r.omega_max) << "\n";
  print_sequence_line(d);
  return 0;
}

int cmd_theorem4(const Flags& f) {
  const auto g = degseq::io::parse_graph(read_file(f.graph_file));
  const auto r = degseq::check_theorem4(g);
  if (f.json) {
    json j = base("theorem4");
    j["n"] = g.n();
    j["m"] = g.edge_count();
    j["gamma"] = r.gamma;
    j["slater"] = r.slater;
    j["cycle_excess"] = r.cycle_excess;
    j["bound"] = r.bound;
    j["holds"] = r.holds;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "gamma=" << r.gamma << " bound=" << r.bound << " holds=" << (r.holds ? "true" : "false") << "\n";
    std::cout << "slater=" << r.slater << " cycle_excess=" << r.cycle_excess << "\n";
  }
  return 0;
}

degseq::Parameter parse_parameter(const std::string& s) {
  using P = degseq::Parameter;
  for (P p : {P::OmegaMax, P::AlphaMax, P::GammaMin, P::GammaMinForest, P::AlphaMaxForest}) {
    if (degseq::to_string(p) == s) return p;
  }
  degseq::fail(degseq::ErrorKind::ParseError, "unknown parameter " + s);
}

int cmd_sweep(const Flags& f) {
  degseq::SweepOptions o;
  o.n_min = f.n_min;
  o.n_max = f.n_max;
  o.realization_class = f.forest ? degseq::RealizationClass::Forest : degseq::RealizationClass::General;
  o.allow_zeros = f.allow_zeros;
  o.oracle = oracle_options(f);
  for (const auto& p : f.params) o.parameters.push_back(parse_parameter(p));
  const int limit = f.forest ? o.oracle.forest_limit : o.oracle.general_limit;
  if (o.n_max > limit) {
    degseq::fail(degseq::ErrorKind::ParseError,
                 "--n-max " + std::to_string(o.n_max) + " exceeds the oracle limit " + std::to_string(limit));
  }
  const auto s = degseq::run_sweep(o);
  if (f.json) {
    json j = base("sweep");
    j["class"] = std::string(degseq::to_string(o.realization_class));
    json params = json::array();
    for (auto p : o.parameters.empty() ? degseq::default_sweep_parameters(o.realization_class) : o.parameters) {
      params.push_back(std::string(degseq::to_string(p)));
    }
    j["parameters"] = params;
    json rows = json::array();
    for (const auto& r : s.rows) rows.push_back({{"n", r.n}, {"sequences", r.sequences}, {"mismatches", r.mismatches}});
    j["rows"] = rows;
    json bad = json::array();
    for (const auto& m : s.mismatches) {
      bad.push_back({{"sequence", m.sequence},
                     {"parameter", std::string(degseq::to_string(m.parameter))},
                     {"computed", m.computed},
                     {"expected", m.expected}});
    }
    j["mismatches"] = bad;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "n sequences mismatches\n";
    int total = 0;
    for (const auto& r : s.rows) {
      std::cout << r.n << " " << r.sequences << " " << r.mismatches << "\n";
      total += r.sequences;
    }
    std::cout << "total sequences=" << total << " mismatches=" << s.mismatches.size() << "\n";
    for (const auto& m : s.mismatches) {
      std::cout << "MISMATCH " << join(m.sequence) << " " << degseq::to_string(m.parameter)
                << " computed=" << m.computed << " expected=" << m.expected << "\n";
    }
  }
  return s.mismatches.empty() ? 0 : 3;
}

int cmd_bipartite(const Flags& f) {
  json spec_json;
  try {
    spec_json = json::parse(read_source(f.input));
  } catch (const json::exception& e) {
    degseq::fail(degseq::ErrorKind::ParseError, std::string("bad bipartite spec JSON: ") + e.what());
  }
  const auto spec = degseq::io::spec_from_json(spec_json);
  const bool feasible = degseq::gale_ryser_feasible(spec);
  std::optional<degseq::Graph> g;
  if (feasible) {
    g = degseq::build_bounded_bipartite(spec);
    if (!degseq::audit_bipartite(*g, spec)) {
      degseq::fail(degseq::ErrorKind::InternalError, "bipartite construction failed its audit");
    }
  }
  if (f.json) {
    json j = base("bipartite");
    j["feasible"] = feasible;
    j["edges"] = g ? degseq::io::edges_to_json(*g) : json(nullptr);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "feasible=" << (feasible ? "true" : "false") << "\n";
    if (g) std::cout << "edges: " << edge_text(*g) << "\n";
  }
  return 0;
}

int exit_code(degseq::ErrorKind k) {
  using K = degseq::ErrorKind;
  switch (k) {
    case K::ParseError:
    case K::InvalidSequence: return 1;
    case K::InternalError:
    case K::InternalRepairFailure: return 3;
    default: return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extremal domination, independence and clique numbers over degree-sequence realizations"};
  app.require_subcommand(1);
  Flags f;

  auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", f.json, "Emit a JSON object instead of text"); };
  auto seq_arg = [&](CLI::App* sub) {
    sub->add_option("SEQ", f.input, "Degree sequence, '-' for stdin or '@file'")->required();
  };
  auto witness_flag = [&](CLI::App* sub) { sub->add_flag("--witness", f.witness, "Attach a witness realization"); };

  std::string command;
  auto simple = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->callback([&command, name] { command = name; });
    json_flag(sub);
    return sub;
  };

  seq_arg(simple("check", "Graphicality and forest tests"));
  seq_arg(simple("bounds", "Slater number, annihilation number and the forest domination bounds"));
  {
    auto* sub = simple("omega-max", "Largest clique number over realizations");
    seq_arg(sub);
    witness_flag(sub);
  }
  {
    auto* sub = simple("alpha-max", "Largest independence number over realizations");
    seq_arg(sub);
    witness_flag(sub);
  }
  {
    auto* sub = simple("gamma-min", "Smallest domination number over realizations");
    seq_arg(sub);
    witness_flag(sub);
    sub->add_option("--delta-cap", f.delta_cap, "Reject sequences with maximum degree above D");
  }
  {
    auto* forest = app.add_subcommand("forest", "Extrema over forest realizations");
    forest->require_subcommand(1);
    for (const std::string name : {"gamma-min", "alpha-max"}) {
      auto* sub = forest->add_subcommand(name, name == "gamma-min" ? "Smallest domination number over forests"
                                                                   : "Largest independence number over forests");
      sub->callback([&command, name] { command = "forest " + name; });
      json_flag(sub);
      seq_arg(sub);
      witness_flag(sub);
    }
  }
  {
    auto* sub = simple("realize", "Build one realization");
    sub->add_option("METHOD", f.method, "hh, forest, lemma1 or lemma2")
        ->required()
        ->check(CLI::IsMember({"hh", "forest", "lemma1", "lemma2"}));
    seq_arg(sub);
    sub->add_option("--k", f.k, "Split size for lemma1 and lemma2");
  }
  {
    auto* sub = simple("oracle", "Exhaustive extrema over all labeled realizations");
    seq_arg(sub);
    sub->add_flag("--forest", f.forest, "Restrict to forest realizations");
    sub->add_option("--limit", f.limit, "Largest n accepted")->check(CLI::PositiveNumber);
  }
  {
    auto* sub = simple("theorem4", "Check the domination bound for a connected graph");
    sub->add_option("--graph", f.graph_file, "Edge list or JSON graph file, '-' for stdin")->required();
  }
  {
    auto* sub = simple("sweep", "Compare every formula against the oracle over a range of n");
    sub->add_option("--n-min", f.n_min, "Smallest n")->check(CLI::PositiveNumber);
    sub->add_option("--n-max", f.n_max, "Largest n")->required()->check(CLI::PositiveNumber);
    sub->add_flag("--forest", f.forest, "Sweep forest sequences");
    sub->add_flag("--allow-zeros", f.allow_zeros, "Include forest sequences with zero entries");
    sub->add_option("--params", f.params, "Parameters to check, e.g. OMEGA_MAX GAMMA_MIN")->delimiter(',');
    sub->add_option("--limit", f.limit, "Oracle limit")->check(CLI::PositiveNumber);
  }
  seq_arg(simple("bipartite", "Bounded bipartite degree spec (JSON) feasibility and construction"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (command == "check") return cmd_check(f);
    if (command == "bounds") return cmd_bounds(f);
    if (command == "realize") return cmd_realize(f);
    if (command == "oracle") return cmd_oracle(f);
    if (command == "theorem4") return cmd_theorem4(f);
    if (command == "sweep") return cmd_sweep(f);
    if (command == "bipartite") return cmd_bipartite(f);
    const auto d = degseq::parse_sequence(read_source(f.input));
    degseq::ExtremalResult r;
    if (command == "omega-max") {
      r = degseq::omega_max(d);
    } else if (command == "alpha-max") {
      r = degseq::alpha_max(d);
    } else if (command == "gamma-min") {
      r = degseq::gamma_min_bounded(d, f.delta_cap);
    } else if (command == "forest gamma-min") {
      r = degseq::gamma_min_forest(d);
    } else {
      r = degseq::alpha_max_forest(d);
    }
    emit_extremal(command, d, r, f);
    return 0;
  } catch (const degseq::Error& e) {
    if (f.json) {
      json j = base(command);
      j["error"] = {{"kind", std::string(degseq::to_string(e.kind()))}, {"message", e.what()}};
      std::cout << j.dump() << "\n";
    }
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    if (f.json) {
      json j = base(command);
      j["error"] = {{"kind", "InternalError"}, {"message", e.what()}};
      std::cout << j.dump() << "\n";
    }
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
