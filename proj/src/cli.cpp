#include "rtcover/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "rtcover/bounds.hpp"
#include "rtcover/core.hpp"
#include "rtcover/covers.hpp"
#include "rtcover/generators.hpp"
#include "rtcover/instance_io.hpp"
#include "rtcover/solvers.hpp"

namespace rtcover {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 64;

json vertices_json(const PartitionedHypergraph& h,
                   const std::vector<int>& globals) {
  json arr = json::array();
  for (int g : globals) {
    Vertex v = h.vertex_of_global(g);
    arr.push_back({v.part, v.index});
  }
  return arr;
}

json bound_json(const BoundResult& b) {
  const char* kind = b.kind == BoundResult::Kind::Lower   ? "lower"
                     : b.kind == BoundResult::Kind::Upper ? "upper"
                                                          : "exact";
  return {{"value", b.value},
          {"kind", kind},
          {"source", b.source},
          {"applicable", b.applicable}};
}

std::uint64_t default_step_budget() {
  if (const char* env = std::getenv("RYSER_STEP_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 50'000'000ULL;
}

void emit_instance(const PartitionedHypergraph& graph,
                   const std::optional<json>& meta, const std::string& out_path,
                   std::ostream& out) {
  if (out_path.empty()) {
    out << serialize_instance(graph, meta);
  } else {
    write_instance(out_path, graph, meta);
  }
}

struct GenArgs {
  std::string family, input, out_path;
  int r = 0, ell = 0, q = 2, n = 2, t = 1, a = 1, edges = 10, part_size = 0;
  std::uint64_t seed = 1;
};

int run_gen(const GenArgs& args, std::ostream& out) {
  PartitionedHypergraph graph;
  GeneratorMetadata meta;
  if (args.family == "hrl") {
    Generated g = h_r_ell(args.r, args.ell);
    graph = std::move(g.graph);
    meta = std::move(g.meta);
  } else if (args.family == "tpp") {
    Generated g = truncated_projective_plane(args.q);
    graph = std::move(g.graph);
    meta = std::move(g.meta);
  } else if (args.family == "affine-dual") {
    Generated g = affine_lines_dual(args.q, args.n);
    graph = std::move(g.graph);
    meta = std::move(g.meta);
  } else if (args.family == "random") {
    Generated g =
        random_rt_graph(args.r, args.t, args.edges, args.seed, args.part_size);
    graph = std::move(g.graph);
    meta = std::move(g.meta);
  } else if (args.family == "blowup" || args.family == "extend") {
    InstanceFile in = load_instance(args.input);
    graph = args.family == "blowup"
                ? blowup(in.graph, args.t)
                : shared_vertex_extension(in.graph, args.a);
    meta.family = args.family;
    meta.r = graph.r();
    meta.params[args.family == "blowup" ? "t" : "a"] =
        args.family == "blowup" ? args.t : args.a;
    if (graph.edge_count() >= 2 && graph.edge_count() <= 2000) {
      meta.guaranteed_t = min_pairwise_intersection(graph).first;
    }
  } else {
    throw std::invalid_argument("unknown family: " + args.family);
  }
  emit_instance(graph, metadata_to_json(meta), args.out_path, out);
  return kExitOk;
}

int run_gen_complete(const std::vector<int>& parts,
                     const std::string& out_path, std::ostream& out) {
  PartitionedHypergraph graph = complete_partite(parts);
  GeneratorMetadata meta;
  meta.family = "complete";
  meta.r = graph.r();
  if (graph.edge_count() >= 2 && graph.edge_count() <= 2000) {
    meta.guaranteed_t = min_pairwise_intersection(graph).first;
  }
  emit_instance(graph, metadata_to_json(meta), out_path, out);
  return kExitOk;
}

int run_verify(const std::string& input, std::optional<int> t,
               std::optional<int> k, bool strict, std::ostream& out) {
  InstanceFile file = load_instance(input);
  const PartitionedHypergraph& h = file.graph;
  json checks = json::array();
  bool all_ok = true;

  std::vector<Violation> violations = validate(h);
  json vio = json::array();
  for (const auto& v : violations) vio.push_back(v.detail);
  checks.push_back({{"name", "structure"},
                    {"pass", violations.empty()},
                    {"violations", vio}});
  all_ok = all_ok && violations.empty();

  if (t && !k) {
    bool pass = true;
    json entry = {{"name", "t-intersecting"}, {"t", *t}};
    if (h.edge_count() >= 2) {
      int tmin = min_pairwise_intersection(h).first;
      pass = tmin >= *t;
      entry["min_pairwise"] = tmin;
    }
    entry["pass"] = pass;
    checks.push_back(entry);
    all_ok = all_ok && pass;
  }
  if (t && k) {
    bool pass = true;
    json entry = {{"name", "kwise-t-intersecting"}, {"t", *t}, {"k", *k}};
    int kk = std::min(*k, h.edge_count());
    if (kk >= 2) {
      int tmin = kwise_min_intersection(h, kk);
      pass = tmin >= *t;
      entry["kwise_min"] = tmin;
    }
    entry["pass"] = pass;
    checks.push_back(entry);
    all_ok = all_ok && pass;
  }
  if (strict) {
    std::optional<int> st = is_strictly_intersecting(h);
    json entry = {{"name", "strictly-intersecting"}, {"pass", st.has_value()}};
    if (st) entry["t"] = *st;
    checks.push_back(entry);
    all_ok = all_ok && st.has_value();
  }

  out << json{{"valid", all_ok}, {"checks", checks}}.dump(2) << "\n";
  return all_ok ? kExitOk : kExitFail;
}

int run_solve(const std::string& input, int s, std::uint64_t budget,
              int parallel, std::ostream& out) {
  InstanceFile file = load_instance(input);
  SolveOptions opts;
  opts.step_budget = budget;
  opts.threads = parallel;
  SolveResult result = tau_s_exact(file.graph, s, opts);
  json doc;
  doc["s"] = s;
  doc["steps"] = result.steps;
  if (result.status == SolveStatus::Exact) {
    doc["status"] = "exact";
    doc["tau_s"] = result.value;
    doc["witness"] = vertices_json(file.graph, result.witness.vertices);
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  doc["status"] = "unknown";
  doc["best_found"] = result.value;
  doc["witness"] = vertices_json(file.graph, result.witness.vertices);
  out << doc.dump(2) << "\n";
  return kExitUnknown;
}

int run_cover(const std::string& input, int t, const std::string& method,
              std::optional<int> k, const std::vector<int>& edges,
              std::ostream& out, std::ostream& err) {
  InstanceFile file = load_instance(input);
  const PartitionedHypergraph& h = file.graph;
  CoverCertificate cert;
  if (method == "auto") {
    cert = general_cover(h, t);
  } else if (method == "trivial") {
    cert = trivial_cover(h, t);
  } else if (method == "two-edge") {
    int e1, e2;
    if (edges.empty()) {
      auto [tmin, pair] = min_pairwise_intersection(h);
      e1 = pair.first;
      e2 = pair.second;
    } else if (edges.size() == 2) {
      e1 = edges[0];
      e2 = edges[1];
    } else {
      throw std::invalid_argument("--edges for two-edge needs two indices");
    }
    cert = two_edge_cover(h, t, e1, e2).first;
  } else if (method == "three-edge") {
    std::vector<int> es = edges.empty() ? std::vector<int>{0, 1, 2} : edges;
    if (es.size() != 3) {
      throw std::invalid_argument("--edges for three-edge needs three indices");
    }
    cert = three_edge_cover(h, t, es[0], es[1], es[2]).first;
  } else if (method == "prop29") {
    cert = prop_29_cover(h, t);
  } else if (method == "kwise") {
    if (!k) throw std::invalid_argument("--method kwise requires --k");
    cert = kwise_cover(h, *k, t);
  } else {
    throw std::invalid_argument("unknown cover method: " + method);
  }

  if (!validate_cover(h, cert)) {
    err << "certificate failed re-validation\n";
    return kExitFail;
  }
  json doc;
  doc["size"] = cert.size();
  doc["vertices"] = vertices_json(h, cert.vertices);
  doc["provenance"] = cert.provenance;
  doc["bound"] = cert.claimed_bound ? json(*cert.claimed_bound) : json();
  doc["validated"] = true;
  out << doc.dump(2) << "\n";
  return kExitOk;
}

int run_bounds(int r, int t, std::optional<int> k, std::optional<int> s,
               std::optional<int> d, std::optional<int> delta,
               std::optional<int> upper_delta, bool strict, std::ostream& out) {
  json doc;
  doc["r"] = r;
  doc["t"] = t;
  doc["lower"] = bound_json(lower_bound(r, t));
  doc["upper"] = bound_json(upper_bound(r, t));
  json cases = json::array();
  for (const auto& c : upper_bound_cases(r, t)) cases.push_back(bound_json(c));
  doc["cases"] = cases;
  if (t <= r - 1) {
    ConjectureReport report = conjecture_status(r, t);
    doc["status"] = to_string(report.status);
    if (!report.source.empty()) doc["status_source"] = report.source;
    doc["not_tight"] = report.not_tight;
  }
  if (k) doc["kwise"] = bound_json(kwise_bound(r, t, *k));
  if (s) {
    json list = json::array();
    for (const auto& b : scover_bounds(r, t, *s)) list.push_back(bound_json(b));
    doc["scover"] = list;
  }
  if (d) doc["regular"] = bound_json(regular_bound(r, t, *d));
  if (delta && upper_delta) {
    doc["degree"] = bound_json(degree_bound(r, t, *delta, *upper_delta));
  }
  if (strict) {
    auto b = strict_bound(r, t);
    doc["strict"] = b ? bound_json(*b) : json();
  }
  out << doc.dump(2) << "\n";
  return kExitOk;
}

int run_report(int steps, const std::string& out_path, std::ostream& out) {
  if (steps < 1) throw std::invalid_argument("--steps must be positive");
  std::vector<Rational> grid;
  grid.reserve(steps);
  for (int i = 1; i <= steps; ++i) grid.push_back(Rational(i, steps));
  std::string csv = asymptotics_csv(asymptotics_report(grid));
  if (out_path.empty()) {
    out << csv;
  } else {
    std::ofstream file(out_path);
    if (!file) throw std::invalid_argument("cannot open " + out_path);
    file << csv;
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"(r,t)-graph toolkit: generators, verification, exact covers, "
               "constructive covers, and closed-form bounds"};
  app.require_subcommand(1);

  GenArgs gen;
  std::vector<int> gen_parts;
  auto* cmd_gen = app.add_subcommand("gen", "generate an instance");
  cmd_gen->add_option("--family", gen.family,
                      "hrl|tpp|blowup|affine-dual|complete|extend|random")
      ->required();
  cmd_gen->add_option("--r", gen.r, "uniformity");
  cmd_gen->add_option("--ell", gen.ell, "level parameter of hrl");
  cmd_gen->add_option("--q", gen.q, "prime order");
  cmd_gen->add_option("--n", gen.n, "affine dimension");
  cmd_gen->add_option("--t", gen.t, "blowup factor / intersection level");
  cmd_gen->add_option("--a", gen.a, "number of shared vertices to add");
  cmd_gen->add_option("--edges", gen.edges, "target edge count (random)");
  cmd_gen->add_option("--seed", gen.seed, "random seed");
  cmd_gen->add_option("--part-size", gen.part_size, "part size (random)");
  cmd_gen->add_option("--parts", gen_parts, "part sizes (complete)")
      ->delimiter(',');
  cmd_gen->add_option("--input", gen.input, "input instance (blowup/extend)");
  cmd_gen->add_option("--out", gen.out_path, "output file (default stdout)");

  std::string verify_input;
  std::optional<int> verify_t, verify_k;
  bool verify_strict = false;
  auto* cmd_verify = app.add_subcommand("verify", "check instance properties");
  cmd_verify->add_option("--input", verify_input)->required();
  auto* opt_vt =
      cmd_verify->add_option("--t", verify_t, "required intersection level");
  cmd_verify->add_option("--k", verify_k, "check k-wise intersections")
      ->needs(opt_vt);
  cmd_verify->add_flag("--strict", verify_strict,
                       "require strictly t-intersecting");

  std::string solve_input;
  int solve_s = 1, solve_parallel = 1;
  std::uint64_t solve_budget = default_step_budget();
  auto* cmd_solve = app.add_subcommand("solve", "exact minimum s-cover");
  cmd_solve->add_option("--input", solve_input)->required();
  cmd_solve->add_option("--s", solve_s, "cover multiplicity");
  cmd_solve->add_option("--budget", solve_budget, "step budget");
  cmd_solve->add_option("--parallel", solve_parallel, "worker count");

  std::string cover_input, cover_method = "auto";
  int cover_t = 0;
  std::optional<int> cover_k;
  std::vector<int> cover_edges;
  auto* cmd_cover = app.add_subcommand("cover", "constructive cover");
  cmd_cover->add_option("--input", cover_input)->required();
  cmd_cover->add_option("--t", cover_t, "intersection level")->required();
  cmd_cover->add_option("--method", cover_method,
                        "auto|two-edge|three-edge|prop29|kwise|trivial");
  cmd_cover->add_option("--k", cover_k, "k for the kwise method");
  cmd_cover->add_option("--edges", cover_edges,
                        "explicit edge indices for two-/three-edge")
      ->delimiter(',');

  int bounds_r = 0, bounds_t = 0;
  std::optional<int> bounds_k, bounds_s, bounds_d, bounds_delta, bounds_Delta;
  bool bounds_strict = false;
  auto* cmd_bounds = app.add_subcommand("bounds", "closed-form bounds");
  cmd_bounds->add_option("--r", bounds_r)->required();
  cmd_bounds->add_option("--t", bounds_t)->required();
  cmd_bounds->add_option("--k", bounds_k, "k-wise bound");
  cmd_bounds->add_option("--s", bounds_s, "s-cover bounds");
  cmd_bounds->add_option("--d", bounds_d, "regular-degree bound");
  auto* opt_delta = cmd_bounds->add_option("--delta", bounds_delta,
                                           "minimum degree");
  auto* opt_Delta = cmd_bounds->add_option("--Delta", bounds_Delta,
                                           "maximum degree");
  opt_delta->needs(opt_Delta);
  opt_Delta->needs(opt_delta);
  cmd_bounds->add_flag("--strict", bounds_strict,
                       "include the strictly-intersecting bound");

  int report_steps = 100;
  std::string report_out;
  auto* cmd_report = app.add_subcommand("report", "asymptotics CSV");
  cmd_report->add_option("--steps", report_steps, "grid resolution");
  cmd_report->add_option("--out", report_out, "output CSV path");

  std::vector<char*> argv;
  std::vector<std::string> owned = args;
  std::string prog = "rtcover";
  argv.push_back(prog.data());
  for (auto& a : owned) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (cmd_gen->parsed()) {
      if (gen.family == "complete") {
        return run_gen_complete(gen_parts, gen.out_path, out);
      }
      return run_gen(gen, out);
    }
    if (cmd_verify->parsed()) {
      return run_verify(verify_input, verify_t, verify_k, verify_strict, out);
    }
    if (cmd_solve->parsed()) {
      return run_solve(solve_input, solve_s, solve_budget, solve_parallel,
                       out);
    }
    if (cmd_cover->parsed()) {
      return run_cover(cover_input, cover_t, cover_method, cover_k,
                       cover_edges, out, err);
    }
    if (cmd_bounds->parsed()) {
      return run_bounds(bounds_r, bounds_t, bounds_k, bounds_s, bounds_d,
                        bounds_delta, bounds_Delta, bounds_strict, out);
    }
    if (cmd_report->parsed()) {
      return run_report(report_steps, report_out, out);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}

}  // namespace rtcover
