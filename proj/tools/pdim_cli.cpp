#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pdim/degenerate.hpp"
#include "pdim/encoding.hpp"
#include "pdim/errors.hpp"
#include "pdim/exact.hpp"
#include "pdim/forest.hpp"
#include "pdim/generators.hpp"
#include "pdim/graph.hpp"
#include "pdim/io.hpp"
#include "pdim/latin.hpp"
#include "pdim/treedecomp.hpp"
#include "pdim/tw_encoder.hpp"

namespace {

using namespace pdim;

constexpr int kExitParse = 2;    // unreadable or malformed input
constexpr int kExitInvalid = 3;  // artifact fails verification
constexpr int kExitBudget = 4;   // timeout or retries exhausted

struct Config {
  std::string input;   // empty or "-" means stdin
  std::string output;  // empty or "-" means stdout
  std::string format = "edgelist";
  std::string method = "auto";
  std::string td_path;
  std::string encoding_path;
  std::uint64_t seed = 0;
  double epsilon = kForestEps;
  int multiplier = 1;
  int max_retries = 64;
  long long timeout_ms = 30000;
  int order = 0;
  bool check = false;
  int seeds = 3;
};

std::string slurp(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InvalidArgument("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void emit(const std::string& path, const std::string& data) {
  if (path.empty() || path == "-") {
    std::cout << data;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidArgument("cannot open " + path);
  f << data;
}

GraphFormat format_of(const std::string& name) {
  if (name == "edgelist") return GraphFormat::Edgelist;
  if (name == "dimacs") return GraphFormat::Dimacs;
  if (name == "pace-gr") return GraphFormat::PaceGr;
  throw InvalidArgument("unknown format " + name);
}

double log2_of(int n) { return n >= 2 ? std::log2(static_cast<double>(n)) : 0.0; }

long long ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                               t0)
      .count();
}

int cmd_encode(const Config& cfg) {
  Graph g = parse_graph(slurp(cfg.input), format_of(cfg.format));
  std::optional<TreeDecomposition> td;
  if (!cfg.td_path.empty()) td = parse_pace_td(slurp(cfg.td_path), g);

  std::string method = cfg.method;
  if (method == "auto") {
    if (is_forest(g)) {
      method = "forest";
    } else if (td) {
      method = "treewidth";
    } else if (g.n() <= 512) {
      TreeDecomposition h = decompose_heuristic(g);
      if (h.width() <= 3) {
        method = "treewidth";
        td = std::move(h);
      } else {
        method = "degenerate";
      }
    } else {
      method = "degenerate";
    }
  }

  auto t0 = std::chrono::steady_clock::now();
  Encoding enc({}, 1);
  double bound = 1.0;
  bool certified = true;
  int retries = 0;
  int rc = 0;
  if (g.n() == 0) {
    // nothing to encode; emit the trivial empty artifact
  } else if (method == "forest") {
    enc = encode_forest(g, cfg.epsilon);
    bound = 1.441 * log2_of(g.n()) + 3.0;
  } else if (method == "treewidth") {
    TwResult r = encode_treewidth(g, td ? &*td : nullptr);
    enc = std::move(r.enc);
    certified = r.bound_certified;
    bound = (r.width_used + 2) * (log2_of(g.n()) + 1.0);
  } else if (method == "degenerate") {
    DegenerateParams dp;
    dp.seed = cfg.seed;
    dp.multiplier = cfg.multiplier;
    dp.max_retries = cfg.max_retries;
    DegenerateResult r = encode_degenerate(g, dp);
    enc = std::move(r.enc);
    bound = r.p + 1;
    retries = r.retries;
  } else if (method == "exact") {
    SearchBudget budget;
    budget.deadline_ms = cfg.timeout_ms;
    ExactResult r = pdim_exact(g, budget);
    enc = std::move(r.witness);
    certified = r.optimal;
    bound = r.dimension;
    if (!r.optimal) rc = kExitBudget;
  } else {
    throw InvalidArgument("unknown method " + method);
  }

  emit(cfg.output, encoding_to_json(enc) + "\n");
  nlohmann::json meta;
  meta["method"] = method;
  meta["dimension"] = enc.length();
  meta["bound"] = bound;
  meta["bound_certified"] = certified;
  meta["retries"] = retries;
  meta["elapsed_ms"] = ms_since(t0);
  std::cerr << meta.dump() << "\n";
  return rc;
}

const char* kind_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::NotInjective:
      return "not-injective";
    case ViolationKind::EdgeAgrees:
      return "edge-agrees";
    default:
      return "non-edge-disagrees-everywhere";
  }
}

int cmd_verify(const Config& cfg) {
  Graph g = parse_graph(slurp(cfg.input), format_of(cfg.format));
  Encoding e = encoding_from_json(slurp(cfg.encoding_path));
  VerifyReport rep = verify_encoding(g, e);
  if (rep.valid) {
    std::cout << "valid\n";
    return 0;
  }
  for (const auto& v : rep.violations) {
    std::cout << kind_name(v.kind) << " u=" << v.u << " v=" << v.v;
    if (v.coord >= 0) std::cout << " coord=" << v.coord;
    std::cout << "\n";
  }
  std::cout << rep.violation_count << " violation(s)\n";
  return kExitInvalid;
}

int cmd_pdim(const Config& cfg) {
  Graph g = parse_graph(slurp(cfg.input), format_of(cfg.format));
  SearchBudget budget;
  budget.deadline_ms = cfg.timeout_ms;
  ExactResult r = pdim_exact(g, budget);
  std::cout << r.dimension << "\n";
  if (!r.optimal) {
    std::cerr << "budget exhausted; " << r.dimension << " is best known, not certified\n";
    return kExitBudget;
  }
  return 0;
}

nlohmann::json square_to_json(const LatinSquare& s) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < s.order; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < s.order; ++j) row.push_back(s.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

LatinSquare square_from_json(const nlohmann::json& rows, int order) {
  if (!rows.is_array() || static_cast<int>(rows.size()) != order)
    throw ParseError("square must hold order rows", 1);
  LatinSquare s;
  s.order = order;
  s.cells.assign(static_cast<size_t>(order) * order, 0);
  for (int i = 0; i < order; ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || static_cast<int>(row.size()) != order)
      throw ParseError("square row must hold order cells", 1);
    for (int j = 0; j < order; ++j) {
      if (!row[j].is_number_integer()) throw ParseError("non-integer cell", 1);
      s.at(i, j) = row[j].get<int>();
    }
  }
  return s;
}

int cmd_mols(const Config& cfg) {
  if (cfg.order > 0) {
    MolsPair p = construct_mols(cfg.order);
    if (cfg.check) check_mols(p);
    nlohmann::json j;
    j["order"] = p.order;
    j["a"] = square_to_json(p.a);
    j["b"] = square_to_json(p.b);
    emit(cfg.output, j.dump() + "\n");
    return 0;
  }
  if (!cfg.check) throw InvalidArgument("mols needs --order and/or --check");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(slurp(cfg.input));
  } catch (const nlohmann::json::parse_error& err) {
    throw ParseError(err.what(), 1);
  }
  if (!j.is_object() || !j.contains("order") || !j.contains("a") || !j.contains("b"))
    throw ParseError("expected object with keys a, b, order", 1);
  if (!j["order"].is_number_integer()) throw ParseError("order must be an integer", 1);
  int order = j["order"].get<int>();
  if (order < 1 || order > 10000) throw ParseError("order out of range", 1);
  MolsPair p;
  p.order = order;
  p.a = square_from_json(j["a"], order);
  p.b = square_from_json(j["b"], order);
  try {
    check_mols(p);
  } catch (const PropertyViolation& err) {
    std::cout << err.what() << "\n";
    return kExitInvalid;
  }
  std::cout << "valid\n";
  return 0;
}

struct BenchRow {
  std::string family;
  int n = 0;
  int param = 0;
  int dimension = 0;
  double bound = 0.0;
  bool valid = false;
  std::uint64_t seed = 0;
  long long ms = 0;
};

int cmd_bench(const Config& cfg) {
  std::vector<BenchRow> rows;
  auto push = [&](const std::string& family, int n, int param, std::uint64_t seed,
                  const Graph& g, const Encoding& e, double bound, long long ms) {
    BenchRow r;
    r.family = family;
    r.n = n;
    r.param = param;
    r.dimension = e.length();
    r.bound = bound;
    r.valid = verify_encoding(g, e).valid;
    r.seed = seed;
    r.ms = ms;
    rows.push_back(std::move(r));
  };

  for (int n : {10, 100, 1000}) {
    for (int s = 0; s < cfg.seeds; ++s) {
      Graph g = random_forest(n, s);
      auto t0 = std::chrono::steady_clock::now();
      Encoding e = encode_forest(g, cfg.epsilon);
      push("forest", n, 0, s, g, e, 1.441 * log2_of(n) + 3.0, ms_since(t0));
    }
  }
  for (int t : {1, 2, 3}) {
    for (int n : {16, 64}) {
      for (int s = 0; s < cfg.seeds; ++s) {
        Graph g = random_partial_ktree(n, t, 0.6, s);
        std::vector<int> order(g.ids().rbegin(), g.ids().rend());
        TreeDecomposition td = elimination_order_to_decomposition(g, order);
        auto t0 = std::chrono::steady_clock::now();
        TwResult r = encode_treewidth(g, &td);
        push("ktree", n, t, s, g, r.enc, (r.width_used + 2) * (log2_of(n) + 1.0), ms_since(t0));
      }
    }
  }
  for (int k : {1, 2}) {
    for (int n : {64, 256}) {
      for (int s = 0; s < cfg.seeds; ++s) {
        Graph g = random_kdegenerate(n, k, s);
        DegenerateParams dp;
        dp.seed = s;
        auto t0 = std::chrono::steady_clock::now();
        DegenerateResult r = encode_degenerate(g, dp);
        push("degenerate", n, k, s, g, r.enc, r.p + 1.0, ms_since(t0));
      }
    }
  }

  std::sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
    if (a.family != b.family) return a.family < b.family;
    if (a.n != b.n) return a.n < b.n;
    if (a.param != b.param) return a.param < b.param;
    return a.seed < b.seed;
  });
  std::ostringstream csv;
  csv << "family,n,param,dimension,bound,valid,seed,ms\n";
  for (const auto& r : rows) {
    csv << r.family << ',' << r.n << ',' << r.param << ',' << r.dimension << ',' << r.bound << ','
        << (r.valid ? "true" : "false") << ',' << r.seed << ',' << r.ms << '\n';
  }
  emit(cfg.output, csv.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"product-dimension encodings: constructions, oracle, verification"};
  app.require_subcommand(1);

  auto add_io = [&](CLI::App* c, bool with_format = true) {
    c->add_option("-i,--input", cfg.input, "input path ('-' = stdin)");
    c->add_option("-o,--output", cfg.output, "output path ('-' = stdout)");
    if (with_format)
      c->add_option("-f,--format", cfg.format, "edgelist | dimacs | pace-gr")
          ->check(CLI::IsMember({"edgelist", "dimacs", "pace-gr"}));
  };

  CLI::App* enc = app.add_subcommand("encode", "construct an encoding, JSON to output");
  add_io(enc);
  enc->add_option("-m,--method", cfg.method, "forest | treewidth | degenerate | exact | auto")
      ->check(CLI::IsMember({"forest", "treewidth", "degenerate", "exact", "auto"}));
  enc->add_option("--td", cfg.td_path, "PACE .td decomposition to use (treewidth method)");
  enc->add_option("--seed", cfg.seed, "RNG seed (degenerate method)");
  enc->add_option("--epsilon", cfg.epsilon, "split balance in [0, 0.25) (forest method)");
  enc->add_option("--p-multiplier", cfg.multiplier, "scale the coloring count (degenerate)");
  enc->add_option("--max-retries", cfg.max_retries, "redraw limit (degenerate)");
  enc->add_option("--timeout-ms", cfg.timeout_ms, "search budget (exact method)");

  CLI::App* ver = app.add_subcommand("verify", "check an encoding JSON against a graph");
  add_io(ver);
  ver->add_option("-e,--encoding", cfg.encoding_path, "encoding JSON path")->required();

  CLI::App* pd = app.add_subcommand("pdim", "exact product dimension (oracle)");
  add_io(pd);
  pd->add_option("--timeout-ms", cfg.timeout_ms, "search budget");

  CLI::App* ml = app.add_subcommand("mols", "emit or validate an orthogonal Latin square pair");
  add_io(ml, false);
  ml->add_option("--order", cfg.order, "construct the pair of this order");
  ml->add_flag("--check", cfg.check, "validate (the constructed pair, or --input JSON)");

  CLI::App* bn = app.add_subcommand("bench", "sweep generated families, CSV to output");
  bn->add_option("-o,--output", cfg.output, "output path ('-' = stdout)");
  bn->add_option("--seeds", cfg.seeds, "seeds per configuration")->check(CLI::PositiveNumber);
  bn->add_option("--epsilon", cfg.epsilon, "forest split balance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitParse;
  }

  try {
    if (enc->parsed()) return cmd_encode(cfg);
    if (ver->parsed()) return cmd_verify(cfg);
    if (pd->parsed()) return cmd_pdim(cfg);
    if (ml->parsed()) return cmd_mols(cfg);
    if (bn->parsed()) return cmd_bench(cfg);
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitParse;
  } catch (const RetriesExhausted& e) {
    std::cerr << e.what() << "\n";
    return kExitBudget;
  } catch (const DomainMismatch& e) {
    std::cerr << e.what() << "\n";
    return kExitInvalid;
  } catch (const InvalidArgument& e) {
    std::cerr << e.what() << "\n";
    return kExitParse;
  } catch (const BadOrder& e) {
    std::cerr << e.what() << "\n";
    return kExitParse;
  } catch (const InvalidDecomposition& e) {
    std::cerr << e.what() << "\n";
    return kExitParse;
  } catch (const NotAForest& e) {
    std::cerr << e.what() << "\n";
    return kExitParse;
  } catch (const TooLarge& e) {
    std::cerr << e.what() << "\n";
    return kExitParse;
  } catch (const Error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
