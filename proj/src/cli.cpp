#include "scarf/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "scarf/errors.hpp"
#include "scarf/hypersurface.hpp"
#include "scarf/ideals.hpp"
#include "scarf/json_io.hpp"
#include "scarf/neighborly.hpp"
#include "scarf/poset.hpp"
#include "scarf/random.hpp"
#include "scarf/slack.hpp"
#include "scarf/subdivision.hpp"
#include "scarf/topology.hpp"

namespace scarf {

namespace {

struct RunConfig {
  std::string input;
  std::string output;
  std::string report;
  int max_dim = kAllDims;
  bool check_generic = false;
  bool strict = false;
  std::string order;
  std::string probe;
  std::string locate;
  std::string below;
  long long coverage = 0;
  std::uint64_t seed = 0;
  int threads = 1;
  std::string emit = "json";
  int precision = 12;
  std::string gens;
  std::string vars;
  bool betti = false;
  std::string graph;
};

bool scale_override() { return std::getenv("SCARF_SCALE_OVERRIDE") != nullptr; }

void enforce_scale_guards(const PointSet& A) {
  if (scale_override()) return;
  if (A.size() > 64)
    throw ScaleError("|A| = " + std::to_string(A.size()) +
                     " exceeds the guard of 64 points (set SCARF_SCALE_OVERRIDE to lift)");
  if (A.dim() > 8)
    throw ScaleError("n = " + std::to_string(A.dim()) +
                     " exceeds the guard of 8 (set SCARF_SCALE_OVERRIDE to lift)");
}

std::size_t lattice_guard() { return scale_override() ? SIZE_MAX : 65536; }

void emit_json(const Json& j, const std::string& path) {
  std::string text = j.dump(2) + "\n";
  if (path.empty())
    std::cout << text;
  else
    write_text_file(path, text);
}

PointSet load_point_set(const std::string& path) {
  Json j = load_json_file(path);
  PointSet A = point_set_from_json(j);
  enforce_scale_guards(A);
  return A;
}

std::vector<int> parse_order(const std::string& text, int n) {
  std::vector<int> order;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ','))
    order.push_back(std::stoi(token));
  if (static_cast<int>(order.size()) != n)
    throw InputError("--order must list all " + std::to_string(n) + " coordinates");
  return order;
}

int cmd_check(const RunConfig& cfg) {
  PointSet A = load_point_set(cfg.input);
  Json out;
  out["dim"] = A.dim();
  out["count"] = A.size();
  out["antichain"] = A.is_antichain();
  if (A.antichain_witness()) {
    out["antichain_witness"] = {A.antichain_witness()->first, A.antichain_witness()->second};
  }
  GenericityReport g = is_generic(A);
  out["generic"] = g.generic;
  Json violations = Json::array();
  for (const auto& [i, j] : g.violations) violations.push_back({i, j});
  out["violations"] = std::move(violations);
  emit_json(out, cfg.output);
  return 0;
}

int cmd_complex(const RunConfig& cfg) {
  PointSet A = load_point_set(cfg.input);
  SimplicialComplex K = enumerate_complex(A, cfg.max_dim);
  Json out = complex_to_json(A, K);
  if (cfg.check_generic) out["generic"] = is_generic(A).generic;
  emit_json(out, cfg.output);
  return 0;
}

int cmd_subdivide(const RunConfig& cfg) {
  Json j = load_json_file(cfg.input);
  auto [A, K] = [&]() -> std::pair<PointSet, SimplicialComplex> {
    if (j.contains("facets")) return complex_from_json(j);
    PointSet pts = point_set_from_json(j);
    enforce_scale_guards(pts);
    SimplicialComplex nb = enumerate_complex(pts);
    return {std::move(pts), std::move(nb)};
  }();
  enforce_scale_guards(A);
  GeometricSubdivision gs = geometric_subdivision(A, K);
  if (cfg.emit == "off") {
    std::string off = mesh_to_off(gs.mesh, cfg.precision);
    if (cfg.output.empty())
      std::cout << off;
    else
      write_text_file(cfg.output, off);
  } else {
    emit_json(mesh_to_json(gs.mesh), cfg.output);
  }
  return 0;
}

int cmd_surface(const RunConfig& cfg) {
  PointSet A = load_point_set(cfg.input);
  StaircaseRegion R = staircase_region(A);
  if (!cfg.probe.empty()) {
    ExtendedPoint b = point_from_csv(cfg.probe);
    Json out;
    out["inside"] = region_contains(R, b);
    out["boundary"] = on_boundary(R, b);
    emit_json(out, cfg.output);
    return 0;
  }
  if (cfg.emit == "off") {
    GeometricSubdivision gs = geometric_subdivision(A, enumerate_complex(A));
    std::string off = mesh_to_off(gs.mesh, cfg.precision);
    if (cfg.output.empty())
      std::cout << off;
    else
      write_text_file(cfg.output, off);
    return 0;
  }
  Json out;
  Json corners = Json::array();
  for (const auto& c : R.corners()) corners.push_back(point_to_json(c));
  out["corners"] = std::move(corners);
  emit_json(out, cfg.output);
  return 0;
}

int cmd_topology(const RunConfig& cfg) {
  PointSet A = load_point_set(cfg.input);
  Json out;
  SimplicialComplex K = enumerate_complex(A);
  Json counts = Json::object();
  for (int k = 1; k <= K.max_dim() + 1; ++k)
    counts[std::to_string(k - 1)] = K.face_count_with_size(k);
  out["face_counts"] = std::move(counts);
  out["betti_complex"] = betti_to_json(reduced_homology(K));

  FinitePoset P = neighborly_poset(A, lattice_guard());
  out["betti_order_complex"] = betti_to_json(reduced_homology(order_complex(P)));

  // Crosscut identity: the complex of bounded subsets of A inside its
  // join poset must reproduce the neighborly complex exactly.
  bool identity = false;
  if (A.is_antichain() && A.size() > 0) {
    std::vector<int> C;
    bool all_found = true;
    for (int i = 0; i < A.size() && all_found; ++i) {
      bool found = false;
      for (int e = 0; e < P.size() && !found; ++e) {
        if (P.label(e) == A.point(i)) {
          C.push_back(e);
          found = true;
        }
      }
      all_found = found;
    }
    if (all_found) identity = crosscut_complex(P, C) == K;
  }
  out["crosscut_identity"] = identity;

  if (!cfg.below.empty()) {
    ExtendedPoint b = point_from_csv(cfg.below);
    PointSet Ab = restrict_below(A, b, cfg.strict);
    Json restricted;
    restricted["count"] = Ab.size();
    if (Ab.size() > 0) {
      SimplicialComplex Kb = enumerate_complex(Ab);
      restricted["betti"] = betti_to_json(reduced_homology(Kb));
      restricted["routes_agree"] =
          restrict_complex(A, K, b, cfg.strict).face_count() == Kb.face_count();
    }
    out["restricted"] = std::move(restricted);
  }
  emit_json(out, cfg.report.empty() ? cfg.output : cfg.report);
  return 0;
}

int cmd_slack(const RunConfig& cfg) {
  PointSet A = load_point_set(cfg.input);
  PointSet Astar = augment(A);
  if (!cfg.locate.empty()) {
    ExtendedPoint b = point_from_csv(cfg.locate);
    std::vector<int> order;
    if (!cfg.order.empty()) {
      order = parse_order(cfg.order, A.dim());
    } else {
      for (int k = 1; k <= A.dim(); ++k) order.push_back(k);
    }
    BonnetCertificate cert = locate_bonnet(Astar, b, order);
    Json out;
    out["query"] = point_to_json(cert.query);
    out["order"] = cert.coordinate_order;
    out["members"] = cert.members;
    Json labels = Json::array();
    for (int i : cert.members) labels.push_back(Astar.label(i));
    out["labels"] = std::move(labels);
    out["join"] = point_to_json(cert.join_point);
    emit_json(out, cfg.output);
    return 0;
  }
  if (cfg.coverage > 0) {
    Rng rng(cfg.seed);
    std::vector<ExtendedPoint> samples;
    for (long long s = 0; s < cfg.coverage; ++s) {
      std::vector<Rat> raw;
      for (int i = 0; i < A.dim(); ++i) raw.push_back(rng.rational(100));
      samples.push_back(project_to_hyperplane(ExtendedPoint::from_rats(std::move(raw))));
    }
    CoverageReport report = coverage_check(Astar, samples, false, cfg.threads);
    Json out;
    out["samples"] = report.samples;
    out["hits"] = report.hits;
    out["misses"] = report.misses;
    out["fallback_hits"] = report.fallback_hits;
    emit_json(out, cfg.output);
    return report.all_hit() ? 0 : 1;
  }
  throw InputError("slack: one of --locate or --coverage is required");
}

Json chain_complex_to_json(const GradedChainComplex& C) {
  Json out;
  Json degrees = Json::array();
  for (std::size_t d = 0; d < C.faces.size(); ++d) {
    Json level;
    level["degree"] = d;
    level["rank"] = C.faces[d].size();
    Json degs = Json::array();
    for (const auto& m : C.multidegrees[d]) degs.push_back(point_to_json(m));
    level["multidegrees"] = std::move(degs);
    Json faces = Json::array();
    for (const auto& f : C.faces[d]) faces.push_back(f);
    level["faces"] = std::move(faces);
    degrees.push_back(std::move(level));
  }
  out["degrees"] = std::move(degrees);
  Json boundaries = Json::object();
  for (std::size_t d = 1; d < C.boundaries.size(); ++d)
    boundaries[std::to_string(d)] = C.boundaries[d];
  out["boundaries"] = std::move(boundaries);
  out["minimality_claimed"] = C.minimality_claimed;
  return out;
}

int cmd_ideal(const RunConfig& cfg) {
  if (cfg.vars.empty()) throw InputError("ideal: --vars is required");
  std::vector<std::string> variables;
  std::stringstream stream(cfg.vars);
  std::string token;
  while (std::getline(stream, token, ',')) {
    auto begin = token.find_first_not_of(" \t");
    auto end = token.find_last_not_of(" \t");
    if (begin == std::string::npos) throw InputError("ideal: empty variable name in --vars");
    variables.push_back(token.substr(begin, end - begin + 1));
  }
  MonomialIdeal I = minimize(parse_ideal(cfg.gens, variables));
  if (I.generators.empty()) throw InputError("ideal: no generators");
  if (!scale_override() && static_cast<int>(I.generators.size()) > 64)
    throw ScaleError("ideal has more than 64 minimal generators");

  GradedChainComplex C = scarf_chain_complex(I);
  if (!cfg.emit.empty() && cfg.emit != "json" && cfg.emit != "off")
    write_text_file(cfg.emit, chain_complex_to_json(C).dump(2) + "\n");

  int status = 0;
  Json out;
  out["variables"] = I.variables;
  Json gens = Json::array();
  for (std::size_t g = 0; g < I.generators.size(); ++g)
    gens.push_back(I.monomial_string(static_cast<int>(g)));
  out["generators"] = std::move(gens);
  out["ranks"] = C.ranks();
  out["minimality_claimed"] = C.minimality_claimed;

  if (cfg.betti) {
    BettiTable table = betti_oracle(I, scale_override() ? 1 << 20 : 10,
                                    scale_override() ? 1 << 20 : 4);
    Json entries = Json::array();
    for (const auto& e : table.entries) {
      Json row;
      row["index"] = e.index;
      row["degree"] = point_to_json(e.degree);
      row["rank"] = e.rank;
      entries.push_back(std::move(row));
    }
    out["betti"] = std::move(entries);
    if (C.minimality_claimed) {
      // Oracle support must equal the chain complex's generator degrees.
      bool agrees = true;
      long long scarf_positions = 0;
      for (std::size_t d = 1; d < C.faces.size(); ++d) scarf_positions += C.faces[d].size();
      if (static_cast<long long>(table.entries.size()) != scarf_positions) agrees = false;
      for (std::size_t d = 1; d < C.faces.size() && agrees; ++d)
        for (const auto& m : C.multidegrees[d])
          if (table.rank(static_cast<int>(d) - 1, m) != 1) { agrees = false; break; }
      out["scarf_agrees"] = agrees;
      if (!agrees) status = 1;
    }
  }

  if (!cfg.graph.empty()) {
    GeometricMesh mesh = buchberger_graph(I);
    write_text_file(cfg.graph, mesh_to_json(mesh).dump(2) + "\n");
  }
  emit_json(out, cfg.output);
  return status;
}

}  // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{"exact staircase geometry of point sets and monomial ideals"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_io = [&](CLI::App* sub) {
    sub->add_option("--input", cfg.input, "point set JSON file")->required();
    sub->add_option("--output", cfg.output, "output path (stdout when omitted)");
    sub->add_option("--threads", cfg.threads, "worker cap for parallel stages");
  };

  CLI::App* check = app.add_subcommand("check", "antichain and genericity report");
  add_io(check);

  CLI::App* cpx = app.add_subcommand("complex", "enumerate the neighborly complex");
  add_io(cpx);
  cpx->add_option("--max-dim", cfg.max_dim, "largest face dimension to enumerate");
  cpx->add_flag("--check-generic", cfg.check_generic, "include a genericity verdict");

  CLI::App* sub = app.add_subcommand("subdivide", "realized barycentric subdivision mesh");
  sub->add_option("--input", cfg.input, "point set or complex JSON file")->required();
  sub->add_option("--output", cfg.output, "output path (stdout when omitted)");
  sub->add_option("--threads", cfg.threads, "worker cap for parallel stages");
  sub->add_option("--emit", cfg.emit, "json or off")->check(CLI::IsMember({"json", "off"}));
  sub->add_option("--precision", cfg.precision, "decimal places for OFF export");

  CLI::App* surf = app.add_subcommand("surface", "staircase region queries and mesh export");
  add_io(surf);
  surf->add_option("--probe", cfg.probe, "comma-separated point for membership queries");
  surf->add_option("--emit", cfg.emit, "json or off")->check(CLI::IsMember({"json", "off"}));
  surf->add_option("--precision", cfg.precision, "decimal places for OFF export");

  CLI::App* topo = app.add_subcommand("topology", "poset and homology report");
  add_io(topo);
  topo->add_option("--below", cfg.below, "restrict to points at or below this point");
  topo->add_flag("--strict", cfg.strict, "use the strict restriction");
  topo->add_option("--report", cfg.report, "report path (stdout when omitted)");

  CLI::App* slack = app.add_subcommand("slack", "augmented-set bonnet location and coverage");
  add_io(slack);
  slack->add_option("--locate", cfg.locate, "query point for the coordinate sweep");
  slack->add_option("--order", cfg.order, "coordinate order, e.g. 2,1");
  slack->add_option("--coverage", cfg.coverage, "number of hyperplane samples");
  slack->add_option("--seed", cfg.seed, "sampling seed");

  CLI::App* ideal = app.add_subcommand("ideal", "monomial ideal front end");
  ideal->add_option("--gens", cfg.gens, "monomial list, e.g. \"x^2, x*y, y^2\"")->required();
  ideal->add_option("--vars", cfg.vars, "comma-separated variable names")->required();
  ideal->add_option("--emit", cfg.emit, "chain complex JSON path");
  ideal->add_flag("--betti", cfg.betti, "compute the multigraded Betti table");
  ideal->add_option("--graph", cfg.graph, "Buchberger graph mesh path (3 variables)");
  ideal->add_option("--output", cfg.output, "report path (stdout when omitted)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return cmd_check(cfg);
    if (cpx->parsed()) return cmd_complex(cfg);
    if (sub->parsed()) return cmd_subdivide(cfg);
    if (surf->parsed()) return cmd_surface(cfg);
    if (topo->parsed()) return cmd_topology(cfg);
    if (slack->parsed()) return cmd_slack(cfg);
    if (ideal->parsed()) return cmd_ideal(cfg);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace scarf
