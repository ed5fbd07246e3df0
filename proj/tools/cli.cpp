#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hypermat/hypermat.hpp"

namespace hypermat::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string path;
  bool json = false;
  bool oracle = false;
  bool lenient = false;
  std::string set;
  long k = 0;
  bool unbounded = false;
  std::ostream* warnings = &std::cerr;
};

struct Outcome {
  Json json;
  std::string text;
  int code = kOk;
};

/// Comparison against the exhaustive oracle for one quantity.
struct OracleCheck {
  std::string name;
  bool ran = false;
  bool match = true;
  std::string value;
  std::string expected;
  std::string note;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ParsedHypergraph load(const Options& opt) {
  std::string text;
  if (opt.path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(opt.path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + opt.path);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  ParsedHypergraph parsed = parse_hypergraph(text, {.strict = !opt.lenient});
  for (const std::string& w : parsed.warnings)
    *opt.warnings << "warning: " << w << "\n";
  return parsed;
}

std::vector<EdgeId> edge_subset(const Options& opt, const Hypergraph& h) {
  if (opt.set.empty()) return h.all_edges();
  std::vector<EdgeId> out;
  std::stringstream ss(opt.set);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw UsageError("--set expects comma-separated edge ids, got '" +
                       opt.set + "'");
    out.push_back(std::stoul(tok));
  }
  detail::check_edge_ids(h, out);
  return detail::normalized(out);
}

Json rational(const Rational& r) { return r.str(); }

Json integer(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Json vertex_set(const VertexSet& s) { return Json(s); }

Json partition_json(const Partition& p) {
  Json out = Json::array();
  for (const VertexSet& b : p.blocks()) out.push_back(vertex_set(b));
  return out;
}

std::string partition_text(const Partition& p) {
  std::string out;
  for (const VertexSet& b : p.blocks()) {
    out += out.empty() ? "{" : " {";
    for (std::size_t i = 0; i < b.size(); ++i)
      out += (i ? " " : "") + std::to_string(b[i]);
    out += "}";
  }
  return out;
}

template <class T>
std::string join(const std::vector<T>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i)
    out += (i ? " " : "") + std::to_string(xs[i]);
  return out;
}

/// Runs `oracle` and records whether it agrees; size guards skip the check.
OracleCheck compare(std::string name, std::string value,
                    const std::function<std::string()>& oracle) {
  OracleCheck c{std::move(name), false, true, std::move(value), "", ""};
  try {
    c.expected = oracle();
    c.ran = true;
    c.match = c.expected == c.value;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kSizeGuard) throw;
    c.note = e.what();
  }
  return c;
}

Json oracle_json(const OracleCheck& c) {
  Json j;
  j["checked"] = c.ran;
  if (c.ran) {
    j["match"] = c.match;
    j["expected"] = c.expected;
  } else {
    j["reason"] = c.note;
  }
  return j;
}

std::string oracle_text(const OracleCheck& c) {
  if (!c.ran) return "oracle " + c.name + ": skipped (" + c.note + ")";
  if (c.match) return "oracle " + c.name + ": ok";
  return "oracle " + c.name + ": MISMATCH (got " + c.value + ", oracle " +
         c.expected + ")";
}

void attach(Outcome& o, const std::optional<OracleCheck>& check) {
  if (!check) return;
  o.json["oracle"] = oracle_json(*check);
  o.text += "\n" + oracle_text(*check);
  if (check->ran && !check->match) o.code = kOracleMismatch;
}

EdgeVector ones(std::size_t m, EdgeRole role) {
  return EdgeVector::constant(role, m, Rational(1));
}

// ---------------------------------------------------------------------------

Outcome cmd_rank(const Options& opt) {
  ParsedHypergraph in = load(opt);
  const Hypergraph& h = in.graph;
  auto f = edge_subset(opt, h);
  RankResult r = rank(h, f);
  Outcome o;
  o.json["rank"] = r.rank;
  o.json["edges"] = f;
  o.json["partition"] = partition_json(r.witness_partition);
  o.text = std::to_string(r.rank);
  if (opt.oracle)
    attach(o, compare("rank", std::to_string(r.rank), [&] {
             return std::to_string(brute::rank(h, f));
           }));
  return o;
}

Outcome cmd_independent(const Options& opt) {
  ParsedHypergraph in = load(opt);
  const Hypergraph& h = in.graph;
  auto f = edge_subset(opt, h);
  bool indep = is_independent(h, f);
  Outcome o;
  o.json["independent"] = indep;
  o.json["edges"] = f;
  o.text = indep ? "true" : "false";
  if (opt.oracle)
    attach(o, compare("independent", o.text, [&] {
             return std::string(brute::is_hyperforest(h, f) ? "true"
                                                            : "false");
           }));
  return o;
}

Outcome cmd_maxforest(const Options& opt) {
  ParsedHypergraph in = load(opt);
  const Hypergraph& h = in.graph;
  EdgeVector w = h.num_edges() == 0 ? EdgeVector(EdgeRole::kWeight, {})
                                     : in.column(0, EdgeRole::kWeight);
  HyperforestResult r = max_weight_hyperforest(h, w);
  Outcome o;
  o.json["weight"] = rational(r.weight);
  o.json["edges"] = r.edges;
  o.text = "weight " + r.weight.str() + "\nedges " + join(r.edges);
  if (opt.oracle)
    attach(o, compare("maxforest", r.weight.str(), [&] {
             return brute::max_weight_forest(h, w).str();
           }));
  return o;
}

const char* kind_name(SeparationOutcome::Kind k) {
  switch (k) {
    case SeparationOutcome::Kind::kInPolytope: return "in_polytope";
    case SeparationOutcome::Kind::kNonnegativity: return "nonnegativity";
    case SeparationOutcome::Kind::kSingleEdgeRank: return "single_edge_rank";
    case SeparationOutcome::Kind::kSubsetRank: return "subset_rank";
  }
  return "unknown";
}

Outcome cmd_separate(const Options& opt) {
  ParsedHypergraph in = load(opt);
  const Hypergraph& h = in.graph;
  EdgeVector x = h.num_edges() == 0 ? EdgeVector(EdgeRole::kPoint, {})
                                     : in.column(0, EdgeRole::kPoint);
  SeparationOutcome r = separate_polytope(h, x);
  Outcome o;
  if (r.in_polytope()) {
    o.json["status"] = "in_polytope";
    o.text = "in polytope";
  } else {
    o.json["status"] = "violated";
    o.json["kind"] = kind_name(r.kind);
    o.json["edges"] = r.edges;
    if (r.kind == SeparationOutcome::Kind::kSubsetRank)
      o.json["vertices"] = vertex_set(r.vertices);
    o.json["lhs"] = rational(r.lhs);
    o.json["rhs"] = rational(r.rhs);
    if (r.partition) o.json["partition"] = partition_json(*r.partition);
    std::string sign =
        r.kind == SeparationOutcome::Kind::kNonnegativity ? "-x" : "x";
    o.text = std::string("violated (") + kind_name(r.kind) + "): " + sign +
             "(" + join(r.edges) + ") = " + r.lhs.str() + " > " + r.rhs.str();
    if (r.kind == SeparationOutcome::Kind::kSubsetRank)
      o.text += "\nW = " + join(r.vertices);
  }
  if (opt.oracle)
    attach(o, compare("separate", r.in_polytope() ? "in" : "out", [&] {
             return std::string(
                 brute::check_polytope(h, x).in_polytope() ? "in" : "out");
           }));
  return o;
}

Outcome cmd_strength(const Options& opt) {
  ParsedHypergraph in = load(opt);
  const Hypergraph& h = in.graph;
  EdgeVector c = in.columns.empty() ? ones(h.num_edges(), EdgeRole::kCapacity)
                                    : in.column(0, EdgeRole::kCapacity);
  StrengthResult r = strength(h, c);
  Outcome o;
  o.json["strength"] = rational(r.sigma);
  o.json["floor"] = integer(r.integer_packing);
  o.json["partition"] = partition_json(r.critical_partition);
  o.json["iterations"] = r.iterations;
  o.text = "strength " + r.sigma.str() + "\nfloor " +
           r.integer_packing.get_str() + "\npartition " +
           partition_text(r.critical_partition);
  if (opt.oracle)
    attach(o, compare("strength", r.sigma.str(),
                      [&] { return brute::strength(h, c).str(); }));
  return o;
}

Outcome cmd_arboricity(const Options& opt) {
  ParsedHypergraph in = load(opt);
  const Hypergraph& h = in.graph;
  ArboricityResult r = arboricity(h);
  Outcome o;
  o.json["arboricity"] = rational(r.rho);
  o.json["k"] = integer(r.k);
  o.json["witness"] = vertex_set(r.witness);
  o.json["iterations"] = r.iterations;
  o.text = "arboricity " + r.rho.str() + "\nk " + r.k.get_str() +
           "\nwitness " + join(r.witness);
  if (opt.oracle)
    attach(o, compare("arboricity", r.rho.str(),
                      [&] { return brute::arboricity(h).str(); }));
  return o;
}

Outcome cmd_reinforce(const Options& opt) {
  ParsedHypergraph in = load(opt);
  const Hypergraph& h = in.graph;
  const std::size_t m = h.num_edges();
  if (opt.k < 0) throw UsageError("-k must be nonnegative");
  EdgeVector d = m == 0 ? EdgeVector(EdgeRole::kCost, {})
                        : in.column(0, EdgeRole::kCost);
  std::vector<Bound> u(m);
  EdgeVector u_values(EdgeRole::kBound, {});
  if (!opt.unbounded && m > 0) {
    u_values = in.column(1, EdgeRole::kBound);
    u.assign(u_values.values.begin(), u_values.values.end());
  }
  ReinforcementResult r = reinforce(h, opt.k, d, u);

  Outcome o;
  if (r.status == ReinforcementStatus::kInfeasible) {
    o.code = kInfeasible;
    o.json["status"] = "infeasible";
    o.json["witness"] = partition_json(*r.infeasibility_witness);
    o.text = "infeasible\nwitness partition " +
             partition_text(*r.infeasibility_witness);
  } else {
    o.json["status"] = "optimal";
    o.json["cost"] = rational(r.cost);
    Json x = Json::array();
    std::vector<std::string> xs;
    for (const Rational& v : r.x.values) {
      x.push_back(rational(v));
      xs.push_back(v.str());
    }
    o.json["x"] = x;
    o.json["iterations"] = r.iterations;
    Json dual;
    dual["objective"] = rational(r.dual_objective);
    Json gamma = Json::array();
    for (const RaisedPartition& raised : r.dual.gamma) {
      Json entry;
      entry["partition"] = partition_json(raised.partition);
      entry["gamma"] = rational(raised.gamma);
      gamma.push_back(entry);
    }
    dual["gamma"] = gamma;
    Json beta = Json::array();
    for (const Rational& b : r.dual.beta_e) beta.push_back(rational(b));
    dual["beta"] = beta;
    dual["tight_edges"] = r.dual.tight;
    o.json["dual"] = dual;
    std::string xtext;
    for (std::size_t i = 0; i < xs.size(); ++i) xtext += (i ? " " : "") + xs[i];
    o.text = "optimal\ncost " + r.cost.str() + "\nx " + xtext +
             "\ndual objective " + r.dual_objective.str() + " (" +
             std::to_string(r.dual.gamma.size()) + " raised partitions)";
  }

  if (opt.oracle) {
    std::string got = r.status == ReinforcementStatus::kInfeasible
                          ? "infeasible"
                          : r.cost.str();
    attach(o, compare("reinforce", got, [&]() -> std::string {
             if (opt.unbounded)
               throw Error(ErrorCode::kSizeGuard,
                           "integer enumeration needs finite bounds");
             auto best =
                 brute::min_cost_integer_reinforcement(h, opt.k, d, u_values);
             return best ? best->cost.str() : "infeasible";
           }));
  }
  return o;
}

Outcome cmd_oracle_check(const Options& opt) {
  ParsedHypergraph in = load(opt);
  const Hypergraph& h = in.graph;
  const EdgeSet all = h.all_edges();
  std::vector<OracleCheck> checks;

  checks.push_back(compare("rank", std::to_string(rank(h, all).rank), [&] {
    return std::to_string(brute::rank(h, all));
  }));
  checks.push_back(compare(
      "independent", is_independent(h, all) ? "true" : "false", [&] {
        return std::string(brute::is_hyperforest(h, all) ? "true" : "false");
      }));
  EdgeVector w = ones(h.num_edges(), EdgeRole::kWeight);
  checks.push_back(compare("maxforest", max_weight_hyperforest(h, w).weight.str(),
                           [&] { return brute::max_weight_forest(h, w).str(); }));
  if (h.num_vertices() > 0) {
    checks.push_back(compare(
        "partition", min_partition(h, w, Rational(1)).value.str(), [&] {
          return brute::min_partition(h, all, w, Rational(1)).value.str();
        }));
  }
  if (h.num_vertices() >= 2) {
    checks.push_back(compare("strength", strength(h, w).sigma.str(),
                             [&] { return brute::strength(h, w).str(); }));
  }
  bool loops = false;
  for (EdgeId e = 0; e < h.num_edges(); ++e) loops = loops || h.is_loop(e);
  if (!loops)
    checks.push_back(compare("arboricity", arboricity(h).rho.str(),
                             [&] { return brute::arboricity(h).str(); }));

  Outcome o;
  Json list = Json::array();
  bool all_match = true;
  for (const OracleCheck& c : checks) {
    Json j;
    j["name"] = c.name;
    j["value"] = c.value;
    j.update(oracle_json(c));
    list.push_back(j);
    o.text += (o.text.empty() ? "" : "\n") + oracle_text(c) + " (" + c.value +
              ")";
    all_match = all_match && (!c.ran || c.match);
  }
  o.json["checks"] = list;
  o.json["match"] = all_match;
  if (!all_match) o.code = kOracleMismatch;
  return o;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Hypergraphic matroid toolkit: rank, independence, polytope "
               "separation, strength, arboricity and reinforcement."};
  app.name("hypermat");
  app.require_subcommand(1);

  Options opt;
  opt.warnings = &err;
  std::function<Outcome(const Options&)> handler;

  auto add = [&](const char* name, const char* help,
                 Outcome (*fn)(const Options&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", opt.path, "Hypergraph file ('-' for stdin)")
        ->required();
    sub->add_flag("--json", opt.json, "Print a JSON document");
    sub->add_flag("--oracle", opt.oracle,
                  "Cross-check against the exhaustive oracle (exit 3 on "
                  "mismatch)");
    sub->add_flag("--lenient", opt.lenient,
                  "Drop repeated vertices inside an edge with a warning");
    sub->callback([&handler, fn] { handler = fn; });
    return sub;
  };

  add("rank", "Rank of an edge subset", cmd_rank)
      ->add_option("--set", opt.set, "Comma-separated edge ids (default: all)");
  add("independent", "Is an edge subset a hyperforest", cmd_independent)
      ->add_option("--set", opt.set, "Comma-separated edge ids (default: all)");
  add("maxforest", "Maximum-weight hyperforest (column: w)", cmd_maxforest);
  add("separate", "Separate a point from the hyperforest polytope (column: x)",
      cmd_separate);
  add("strength", "Strength (column: c, default 1)", cmd_strength);
  add("arboricity", "Arboricity", cmd_arboricity);
  CLI::App* reinf = add("reinforce",
                        "Minimum-cost reinforcement (columns: d then u)",
                        cmd_reinforce);
  reinf->add_option("-k", opt.k, "Number of hypertrees to support")
      ->required();
  reinf->add_flag("--unbounded", opt.unbounded,
                  "Ignore the u column and leave every edge unbounded");
  add("oracle-check", "Compare every applicable operation with the oracle",
      cmd_oracle_check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    Outcome o = handler(opt);
    if (opt.json)
      out << o.json.dump() << "\n";
    else
      out << o.text << "\n";
    return o.code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kUsageError;
}

}  // namespace hypermat::cli
