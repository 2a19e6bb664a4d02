#include <mgo/errors.hpp>
#include <mgo/identity.hpp>
#include <mgo/invariant_tensor.hpp>
#include <mgo/json_io.hpp>
#include <mgo/multigraph.hpp>
#include <mgo/operator_expr.hpp>
#include <mgo/polynomial.hpp>

#include <CLI11.hpp>

#include <unistd.h>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using mgo::Json;
using mgo::Rational;

struct RunConfig {
  std::string format;  // "", "text", "json", "csv"
  std::string out_path;
  std::uint64_t seed = 0;
  bool seed_given = false;
  unsigned long long max_cells = 0;
};

std::string effective_format(const RunConfig& cfg) {
  if (!cfg.format.empty()) return cfg.format;
  if (!cfg.out_path.empty()) return "json";
  return isatty(fileno(stdout)) ? "text" : "json";
}

void emit(const RunConfig& cfg, const std::string& rendered) {
  if (cfg.out_path.empty()) {
    std::cout << rendered;
    if (!rendered.empty() && rendered.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(cfg.out_path);
  if (!out) throw std::invalid_argument("cannot open --out file " + cfg.out_path);
  out << rendered;
  if (!rendered.empty() && rendered.back() != '\n') out << "\n";
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string edges_compact(const mgo::Multigraph& g) {
  std::string s;
  for (const auto& [i, j] : g.edges) {
    if (!s.empty()) s += " ";
    s += std::to_string(i) + "-" + std::to_string(j);
  }
  return s.empty() ? "(none)" : s;
}

std::string beta_compact(const mgo::DegreeVector& beta) {
  std::string s = "(" + std::to_string(beta.beta0) + ",[";
  for (std::size_t i = 0; i < beta.vec.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(beta.vec[i]);
  }
  return s + "])";
}

std::string point_compact(const std::vector<Rational>& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ", ";
    s += mgo::rational_to_string(x[i]);
  }
  return s + ")";
}

// ---- enumerate ----------------------------------------------------------

int cmd_enumerate(const RunConfig& cfg, int edges, bool connected,
                  int max_isolated) {
  auto classes = mgo::enumerate_classes(edges, connected, max_isolated);

  Json rows = Json::array();
  for (const auto& g : classes) {
    auto beta = mgo::degree_vector(g);
    rows.push_back(Json{{"graph", mgo::multigraph_to_json(g)},
                        {"beta", mgo::degree_vector_to_json(beta)},
                        {"name", mgo::class_display_name(g)},
                        {"order", g.max_degree()},
                        {"total_order", 2 * g.num_edges()},
                        {"degree", g.num_vertices}});
  }
  Json result{{"command", "enumerate"}, {"edges", edges},
              {"connected", connected}, {"max_isolated", max_isolated},
              {"count", classes.size()}, {"classes", std::move(rows)}};

  std::string fmt = effective_format(cfg);
  if (fmt == "json") {
    emit(cfg, result.dump(2));
  } else if (fmt == "csv") {
    std::ostringstream os;
    os << "name,vertices,edges,beta,order,total_order,degree\n";
    for (const auto& g : classes) {
      os << csv_quote(mgo::class_display_name(g)) << "," << g.num_vertices
         << "," << csv_quote(edges_compact(g)) << ","
         << csv_quote(beta_compact(mgo::degree_vector(g))) << ","
         << g.max_degree() << "," << 2 * g.num_edges() << ","
         << g.num_vertices << "\n";
    }
    emit(cfg, os.str());
  } else {
    std::ostringstream os;
    os << classes.size() << " classes with exactly " << edges << " edge(s)"
       << (connected ? ", connected only" : "") << "\n";
    for (const auto& g : classes) {
      os << "  " << mgo::class_display_name(g) << "\n"
         << "    vertices " << g.num_vertices << ", edges "
         << edges_compact(g) << ", beta "
         << beta_compact(mgo::degree_vector(g)) << ", grading (order "
         << g.max_degree() << ", total order " << 2 * g.num_edges()
         << ", degree " << g.num_vertices << ")\n";
    }
    emit(cfg, os.str());
  }
  return 0;
}

// ---- kernel --------------------------------------------------------------

int cmd_kernel(const RunConfig& cfg, int p, int d) {
  mgo::KernelBasis kb = mgo::kernel(p, d, cfg.max_cells);
  Json result = mgo::kernel_to_json(kb);
  result["command"] = "kernel";
  result["dimension"] = kb.dimension();
  result["rank"] = static_cast<int>(kb.matching_order.size()) - kb.dimension();

  std::string fmt = effective_format(cfg);
  if (fmt == "json") {
    emit(cfg, result.dump(2));
  } else if (fmt == "csv") {
    std::ostringstream os;
    os << "row";
    for (std::size_t c = 0; c < kb.matching_order.size(); ++c) os << ",m" << c + 1;
    os << "\n";
    for (std::size_t r = 0; r < kb.basis.size(); ++r) {
      os << r;
      for (const auto& v : kb.basis[r]) os << "," << mgo::rational_to_string(v);
      os << "\n";
    }
    emit(cfg, os.str());
  } else {
    std::ostringstream os;
    os << "kernel of the evaluation matrix, p=" << p << ", d=" << d
       << ": dimension " << kb.dimension() << ", rank "
       << kb.matching_order.size() - kb.basis.size() << "\n";
    for (const auto& row : kb.basis) {
      os << " ";
      for (const auto& v : row) {
        std::string s = mgo::rational_to_string(v);
        os << std::string(s.size() >= 3 ? 1 : 4 - s.size(), ' ') << s;
      }
      os << "\n";
    }
    emit(cfg, os.str());
  }
  return 0;
}

// ---- identities ----------------------------------------------------------

int cmd_identities(const RunConfig& cfg, int d, int p, bool verify,
                   int witness_dim) {
  auto ids = mgo::discover(d, p, cfg.max_cells);

  Json rows = Json::array();
  std::ostringstream text;
  text << ids.size() << " identit" << (ids.size() == 1 ? "y" : "ies")
       << " in dimension " << d << " with " << p << " edges\n";
  if (cfg.seed_given) text << "seed: " << cfg.seed << "\n";

  for (auto id : ids) {
    Json extra;
    if (verify) id = mgo::verify_identity(id, 20, cfg.seed);
    if (witness_dim > 0) {
      mgo::Identity wit = mgo::witness_nonzero(id, witness_dim, 10000, cfg.seed);
      Json point = Json::array();
      for (const auto& x : wit.status.witness_point)
        point.push_back(mgo::rational_to_string(x));
      extra = Json{{"dim", witness_dim},
                   {"poly", wit.status.witness_poly},
                   {"point", std::move(point)},
                   {"value", mgo::rational_to_string(wit.status.witness_value)}};
    }
    Json row = mgo::identity_to_json(id);
    if (!extra.is_null()) row["witness"] = extra;
    rows.push_back(std::move(row));

    text << "  beta " << beta_compact(id.beta) << " (kernel row "
         << id.kernel_row << "):";
    for (const auto& [g, c] : id.class_coeffs) {
      std::string cs = mgo::rational_to_string(c);
      text << " " << (cs[0] == '-' ? "- " + cs.substr(1) : "+ " + cs) << "*["
           << mgo::class_display_name(g) << "]";
    }
    text << "\n";
    if (verify)
      text << "    verified zero in d=" << id.status.dim << " ("
           << id.status.trials << " trials x 3 points x beta0 in {0,1,2})\n";
    if (witness_dim > 0) {
      std::string pt;
      for (const auto& x : extra["point"]) {
        if (!pt.empty()) pt += ", ";
        pt += x.get<std::string>();
      }
      text << "    nonzero in d=" << witness_dim << ": f = "
           << extra["poly"].get<std::string>() << " at (" << pt << "), value "
           << extra["value"].get<std::string>() << "\n";
    }
  }

  Json result{{"command", "identities"}, {"d", d},      {"p", p},
              {"count", ids.size()},     {"identities", std::move(rows)}};
  if (cfg.seed_given) result["seed"] = cfg.seed;

  std::string fmt = effective_format(cfg);
  if (fmt == "json") {
    emit(cfg, result.dump(2));
  } else if (fmt == "csv") {
    std::ostringstream os;
    os << "beta,kernel_row,coeff,class\n";
    for (const auto& row : result["identities"])
      for (const auto& term : row["terms"])
        os << csv_quote(row["beta"].dump()) << ","
           << row["provenance"]["kernel_row"].get<int>() << ","
           << term["coeff"].get<std::string>() << ","
           << csv_quote(mgo::class_display_name(
                  mgo::multigraph_from_json(term["graph"])))
           << "\n";
    emit(cfg, os.str());
  } else {
    emit(cfg, text.str());
  }
  return 0;
}

// ---- eval ----------------------------------------------------------------

int cmd_eval(const RunConfig& cfg, const std::string& graph_path,
             const std::string& poly_text, const std::string& point_text,
             int beta0) {
  std::ifstream in(graph_path);
  if (!in) throw std::invalid_argument("cannot open graph file " + graph_path);
  Json gj;
  try {
    in >> gj;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("graph file: ") + e.what());
  }
  mgo::Multigraph g = mgo::multigraph_from_json(gj);

  std::vector<Rational> point;
  std::stringstream ss(point_text);
  std::string tok;
  while (std::getline(ss, tok, ',')) point.push_back(mgo::parse_rational(tok));
  if (point.empty()) throw std::invalid_argument("empty --point");
  const int d = static_cast<int>(point.size());

  mgo::Polynomial f = mgo::parse_polynomial(poly_text, d);
  mgo::OperatorExpr expr = mgo::compile(g, beta0);
  Rational value = mgo::evaluate(expr, mgo::jet(f, point, expr.max_vertex_degree()));

  Json result{{"command", "eval"},
              {"graph", mgo::multigraph_to_json(g)},
              {"beta0", beta0},
              {"poly", poly_text},
              {"point", Json::array()},
              {"d", d},
              {"value", mgo::rational_to_string(value)}};
  for (const auto& x : point) result["point"].push_back(mgo::rational_to_string(x));

  std::string fmt = effective_format(cfg);
  if (fmt == "json") {
    emit(cfg, result.dump(2));
  } else if (fmt == "csv") {
    emit(cfg, "value\n" + mgo::rational_to_string(value) + "\n");
  } else {
    emit(cfg, mgo::class_display_name(g) + " on f = " + poly_text + " at " +
                  point_compact(point) + (beta0 ? " with beta0=" + std::to_string(beta0) : "") +
                  ": " + mgo::rational_to_string(value));
  }
  return 0;
}

// ---- tables ---------------------------------------------------------------

int cmd_tables(const RunConfig& cfg) {
  std::vector<mgo::Multigraph> census = mgo::enumerate_classes(0, false, 1);
  for (int p = 1; p <= 3; ++p)
    for (const auto& g : mgo::enumerate_classes(p, true, 0)) census.push_back(g);

  Json census_rows = Json::array();
  for (const auto& g : census)
    census_rows.push_back(Json{{"name", mgo::class_display_name(g)},
                               {"graph", mgo::multigraph_to_json(g)},
                               {"order", g.max_degree()},
                               {"total_order", 2 * g.num_edges()},
                               {"degree", g.num_vertices}});

  Json beta_rows = Json::array();
  for (const auto& beta : mgo::enumerate_degree_vectors(3)) {
    auto orbs = mgo::orbits(beta);
    Json sizes = Json::array();
    for (const auto& o : orbs) sizes.push_back(o.matching_indices.size());
    beta_rows.push_back(Json{{"beta", mgo::degree_vector_to_json(beta)},
                             {"orbit_count", orbs.size()},
                             {"orbit_sizes", std::move(sizes)},
                             {"group_order", mgo::symmetry_group_order(beta).str()}});
  }

  Json result{{"command", "tables"},
              {"census", std::move(census_rows)},
              {"degree_vectors", std::move(beta_rows)}};

  std::string fmt = effective_format(cfg);
  if (fmt == "json") {
    emit(cfg, result.dump(2));
  } else if (fmt == "csv") {
    std::ostringstream os;
    os << "name,order,total_order,degree\n";
    for (const auto& row : result["census"])
      os << csv_quote(row["name"].get<std::string>()) << ","
         << row["order"].get<int>() << "," << row["total_order"].get<int>()
         << "," << row["degree"].get<int>() << "\n";
    os << "\nbeta,orbit_count,group_order,orbit_sizes\n";
    for (const auto& row : result["degree_vectors"]) {
      std::string sizes;
      for (const auto& s : row["orbit_sizes"]) {
        if (!sizes.empty()) sizes += " ";
        sizes += std::to_string(s.get<int>());
      }
      os << csv_quote(row["beta"].dump()) << "," << row["orbit_count"].get<int>()
         << "," << row["group_order"].get<std::string>() << ","
         << csv_quote(sizes) << "\n";
    }
    emit(cfg, os.str());
  } else {
    std::ostringstream os;
    os << "operator classes through three edges (connected, plus the 0-edge rows)\n";
    for (const auto& row : result["census"])
      os << "  " << row["name"].get<std::string>() << "  (order "
         << row["order"].get<int>() << ", total order "
         << row["total_order"].get<int>() << ", degree "
         << row["degree"].get<int>() << ")\n";
    os << "\ndegree vectors with three edges\n";
    for (const auto& row : result["degree_vectors"]) {
      std::string sizes;
      for (const auto& s : row["orbit_sizes"]) {
        if (!sizes.empty()) sizes += "+";
        sizes += std::to_string(s.get<int>());
      }
      int count = row["orbit_count"].get<int>();
      os << "  beta "
         << beta_compact(mgo::degree_vector_from_json(row["beta"])) << ": "
         << count << (count == 1 ? " class" : " classes") << " (orbit sizes "
         << sizes << "), symmetry group order "
         << row["group_order"].get<std::string>() << "\n";
    }
    emit(cfg, os.str());
  }
  return 0;
}

// ---- independence ----------------------------------------------------------

int cmd_independence(const RunConfig& cfg, int edges, int d, int trials) {
  auto classes = mgo::enumerate_classes(edges, false, 0);
  int trials_eff = trials > 0 ? trials : static_cast<int>(classes.size()) + 7;
  int r = mgo::independence_rank(classes, d, trials_eff, cfg.seed);

  Json result{{"command", "independence"}, {"edges", edges},
              {"d", d},                    {"classes", classes.size()},
              {"trials", trials_eff},      {"rank", r},
              {"seed", cfg.seed}};

  std::string fmt = effective_format(cfg);
  if (fmt == "json") {
    emit(cfg, result.dump(2));
  } else if (fmt == "csv") {
    std::ostringstream os;
    os << "edges,d,classes,trials,rank,seed\n"
       << edges << "," << d << "," << classes.size() << "," << trials_eff
       << "," << r << "," << cfg.seed << "\n";
    emit(cfg, os.str());
  } else {
    std::ostringstream os;
    os << "independence rank of the " << classes.size() << " classes with "
       << edges << " edge(s) in dimension " << d << ": " << r << "\n"
       << "trials: " << trials_eff << ", seed: " << cfg.seed << "\n";
    emit(cfg, os.str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact multigraph operator toolkit"};
  app.require_subcommand(1);
  // Shared options (--format, --seed, ...) live on the app; let them be
  // written after the subcommand too.
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  auto* seed_opt = app.add_option("--seed", cfg.seed, "seed for randomized commands");
  app.add_option("--max-cells", cfg.max_cells,
                 "resource ceiling on matrix cells (also MGO_MAX_CELLS)");
  app.add_option("--out", cfg.out_path, "write output to a file");

  int edges = 0, p = 0, d = 0, beta0 = 0, trials = 0, witness_dim = 0;
  int max_isolated = 0;
  bool connected = false, verify = false;
  std::string graph_path, poly_text, point_text;

  auto* c_enum = app.add_subcommand("enumerate", "isomorphism classes with a given edge count");
  c_enum->add_option("--edges", edges, "exact edge count")->required();
  c_enum->add_flag("--connected", connected, "connected classes only");
  c_enum->add_option("--max-isolated", max_isolated, "isolated-vertex variants to add");

  auto* c_kern = app.add_subcommand("kernel", "kernel of the tuple evaluation matrix");
  c_kern->add_option("--p", p, "number of pairs")->required();
  c_kern->add_option("--d", d, "dimension")->required();

  auto* c_ident = app.add_subcommand("identities", "discover dimension-dependent dependencies");
  c_ident->add_option("--d", d, "dimension")->required();
  c_ident->add_option("--p", p, "edge count")->required();
  c_ident->add_flag("--verify", verify, "verify each identity on random jets");
  c_ident->add_option("--witness", witness_dim, "find a nonzero witness in this dimension");

  auto* c_eval = app.add_subcommand("eval", "evaluate one graph operator on a polynomial");
  c_eval->add_option("--graph", graph_path, "graph JSON file")->required();
  c_eval->add_option("--poly", poly_text, "polynomial in x1..xd")->required();
  c_eval->add_option("--point", point_text, "comma-separated rational point")->required();
  c_eval->add_option("--beta0", beta0, "power of f to multiply");

  auto* c_tab = app.add_subcommand("tables", "census and degree-vector tables");

  auto* c_ind = app.add_subcommand("independence", "rank of class evaluations on random jets");
  c_ind->add_option("--edges", edges, "exact edge count")->required();
  c_ind->add_option("--d", d, "dimension")->required();
  c_ind->add_option("--trials", trials, "rows to draw (default classes+7)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  cfg.seed_given = seed_opt->count() > 0;

  try {
    if (*c_enum) return cmd_enumerate(cfg, edges, connected, max_isolated);
    if (*c_kern) return cmd_kernel(cfg, p, d);
    if (*c_ident) {
      if ((verify || witness_dim > 0) && !cfg.seed_given) {
        std::cerr << "error: --verify/--witness require --seed\n";
        return 2;
      }
      return cmd_identities(cfg, d, p, verify, witness_dim);
    }
    if (*c_eval) return cmd_eval(cfg, graph_path, poly_text, point_text, beta0);
    if (*c_tab) return cmd_tables(cfg);
    if (*c_ind) {
      if (!cfg.seed_given) {
        std::cerr << "error: independence requires --seed\n";
        return 2;
      }
      return cmd_independence(cfg, edges, d, trials);
    }
  } catch (const mgo::ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const mgo::VerificationFailure& e) {
    std::cerr << "verification failure: " << e.what();
    if (!e.polynomial.empty())
      std::cerr << " [f = " << e.polynomial << " at " << e.point << "]";
    std::cerr << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
