#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "shortcut_forge/bench.hpp"
#include "shortcut_forge/generators.hpp"
#include "shortcut_forge/io.hpp"
#include "shortcut_forge/pipeline.hpp"

namespace sf = shortcut_forge;

namespace {

enum Exit { kOk = 0, kInvalid = 1, kBadParams = 2, kInfeasible = 3, kRetries = 4 };

int exit_for(sf::ErrorCode code) {
  switch (code) {
    case sf::ErrorCode::Infeasible:
    case sf::ErrorCode::PromiseViolated:
      return kInfeasible;
    case sf::ErrorCode::RetryExhausted:
    case sf::ErrorCode::IterationCapExceeded:
      return kRetries;
    default:
      return kBadParams;
  }
}

std::string basename(const std::string& path) {
  const auto slash = path.find_last_of('/');
  return slash == std::string::npos ? path : path.substr(slash + 1);
}

std::string edges_text(const sf::EdgeList& edges) {
  std::ostringstream out;
  sf::write_edges(out, edges);
  return out.str();
}

struct GenOpts {
  std::string kind;
  std::size_t n = 10;
  double p = 0.1;
  std::size_t layers = 4;
  std::size_t cycles = 3;
  std::size_t cycle_len = 4;
  std::size_t delta = 3;
  std::size_t labels = 3;
  std::size_t rho = 4;
  double density = 0.5;
  bool unsat = false;
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_gen(const GenOpts& o) {
  std::ostringstream graph;
  if (o.kind == "labelcover") {
    const auto planted = sf::gen_labelcover_instance(o.delta, o.labels, o.density, !o.unsat, o.seed);
    const auto lc = sf::gen_labelcover_graph(planted.instance, o.rho);
    sf::write_graph(graph, lc.graph);
    std::ostringstream names;
    sf::write_names(names, lc.names);
    sf::write_file(o.out + ".names", names.str());
    if (!o.unsat) sf::write_file(o.out + ".canonical", edges_text(sf::canonical_shortcut(lc, planted.labeling).edges));
  } else if (o.kind == "path") {
    sf::write_graph(graph, sf::gen_path(o.n));
  } else if (o.kind == "random") {
    sf::write_graph(graph, sf::gen_random_dag(o.n, o.p, o.seed));
  } else if (o.kind == "layered") {
    sf::write_graph(graph, sf::gen_layered(o.n, o.layers, o.p, o.seed));
  } else if (o.kind == "cycles") {
    sf::write_graph(graph, sf::gen_planted_cycles(o.n, o.p, o.cycles, o.cycle_len, o.seed));
  } else {
    std::cerr << "unknown kind '" << o.kind << "' (path, random, layered, cycles, labelcover)\n";
    return kBadParams;
  }
  sf::write_file(o.out, graph.str());
  return kOk;
}

struct SolveOpts {
  std::string graph;
  std::size_t s = 0;
  std::size_t d = 1;
  std::size_t alpha_d = 1;
  std::uint64_t seed = 0;
  std::string out;
  std::string dump_pool;
  bool no_timing = false;
  sf::Constants constants;
};

sf::SolveParams params_of(const SolveOpts& o) {
  sf::SolveParams p;
  p.s = o.s;
  p.d = o.d;
  p.alpha_d = o.alpha_d;
  p.seed = o.seed;
  p.constants = o.constants;
  return p;
}

void report_infeasible(const sf::InfeasibleError& e, const std::string& dump_pool) {
  std::cerr << e.what() << "\ncertifying constraints (k u v : edges):\n";
  std::ostringstream pool;
  for (const auto& c : e.certificate()) {
    pool << c.bound << " " << c.witness.from << " " << c.witness.to << " :";
    for (const auto& edge : c.edges) pool << " " << edge.from << "," << edge.to;
    pool << "\n";
  }
  std::cerr << pool.str();
  if (!dump_pool.empty()) sf::write_file(dump_pool, pool.str());
}

int cmd_shortcut(const SolveOpts& o) {
  const sf::DiGraph g = sf::read_graph_file(o.graph);
  const sf::SolveParams p = params_of(o);
  sf::RunRecord r;
  r.graph = basename(o.graph);
  r.n = g.num_vertices();
  r.m = g.num_edges();
  r.s = p.s;
  r.d = p.d;
  r.alpha_d = p.alpha_d;
  r.seed = p.seed;
  const auto start = std::chrono::steady_clock::now();
  std::size_t bound = p.bound();
  if (g.is_acyclic()) {
    r.report = sf::approx_shortcut_dag(g, p);
  } else {
    const auto scc = sf::approx_shortcut(g, p);
    r.report = scc.condensed;
    r.report.shortcut = scc.shortcut;
    bound = scc.bound;
  }
  r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  r.size = r.report.shortcut.size();
  r.cap = r.report.cap();
  r.regime = r.report.regime;
  r.retries = r.report.retries;
  r.ok = sf::verify_shortcut(g, r.report.shortcut, bound).valid;
  sf::write_file(o.out, edges_text(r.report.shortcut.edges));
  std::cout << sf::to_csv(r, !o.no_timing) << "\n";
  return r.ok ? kOk : kInvalid;
}

int cmd_tcspanner(const SolveOpts& o) {
  const sf::DiGraph g = sf::read_graph_file(o.graph);
  const sf::SolveParams p = params_of(o);
  const auto start = std::chrono::steady_clock::now();
  const auto result = sf::approx_tc_spanner(g, p);
  sf::RunRecord r;
  r.graph = basename(o.graph);
  r.n = g.num_vertices();
  r.m = g.num_edges();
  r.s = p.s;
  r.d = p.d;
  r.alpha_d = p.alpha_d;
  r.seed = p.seed;
  r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  r.size = result.spanner.size();
  r.cap = result.inner.cap() + static_cast<double>(result.reduction_size);
  r.regime = result.inner.regime;
  r.retries = result.inner.retries;
  r.ok = sf::verify_tc_spanner(g, result.spanner, p.bound()).valid;
  sf::write_file(o.out, edges_text(result.spanner));
  std::cout << sf::to_csv(r, !o.no_timing) << "\n";
  return r.ok ? kOk : kInvalid;
}

int cmd_verify(const std::string& graph, const std::string& edges, const std::string& mode, std::size_t bound) {
  const sf::DiGraph g = sf::read_graph_file(graph);
  const sf::EdgeList f = sf::read_edges_file(edges);
  sf::VerifyReport r;
  if (mode == "shortcut") {
    r = sf::verify_shortcut(g, f, bound);
  } else if (mode == "tcspanner") {
    r = sf::verify_tc_spanner(g, f, bound);
  } else {
    std::cerr << "unknown mode '" << mode << "' (shortcut, tcspanner)\n";
    return kBadParams;
  }
  if (r.valid) {
    std::cout << "valid size=" << r.size << " worst_dist=" << r.worst_dist << "\n";
    return kOk;
  }
  std::cout << "invalid: " << r.reason;
  if (r.worst_pair) std::cout << " worst_pair=(" << r.worst_pair->from << "," << r.worst_pair->to << ")";
  if (r.reason == "distance exceeds bound") {
    if (r.worst_dist == sf::kUnreachable) {
      std::cout << " worst_dist=inf";
    } else {
      std::cout << " worst_dist=" << r.worst_dist;
    }
  }
  std::cout << "\n";
  return kInvalid;
}

int cmd_bench(const std::string& suite_path, const std::string& out, bool no_timing) {
  std::ifstream in(suite_path);
  if (!in) throw sf::Error(sf::ErrorCode::Parse, "cannot open " + suite_path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::ostringstream csv;
  csv << sf::csv_header() << "\n";
  bool all_ok = true;
  for (const auto& cell : sf::expand_suite(buf.str())) {
    const auto r = sf::run_cell(cell);
    all_ok = all_ok && r.ok;
    csv << sf::to_csv(r, !no_timing) << "\n";
  }
  sf::write_file(out, csv.str());
  return all_ok ? kOk : kInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shortcut sets and transitive-closure spanners for directed graphs"};
  app.require_subcommand(1);

  GenOpts gen;
  auto* g = app.add_subcommand("gen", "Generate an instance");
  g->add_option("--kind", gen.kind, "path, random, layered, cycles, labelcover")->required();
  g->add_option("--n", gen.n, "Vertex count");
  g->add_option("--p", gen.p, "Edge probability");
  g->add_option("--layers", gen.layers, "Layer count (layered)");
  g->add_option("--cycles", gen.cycles, "Planted cycles (cycles)");
  g->add_option("--cycle-len", gen.cycle_len, "Longest planted cycle (cycles)");
  g->add_option("--delta", gen.delta, "|A| = |B| (labelcover)");
  g->add_option("--labels", gen.labels, "Label count (labelcover)");
  g->add_option("--rho", gen.rho, "Path length (labelcover)");
  g->add_option("--density", gen.density, "Constraint density (labelcover)");
  g->add_flag("--unsat", gen.unsat, "Do not plant a covering labeling (labelcover)");
  g->add_option("--seed", gen.seed, "RNG seed");
  g->add_option("-o,--out", gen.out, "Output edge-list file")->required();

  SolveOpts sc;
  auto* s = app.add_subcommand("shortcut", "Approximate (s, d)-shortcut");
  SolveOpts sp;
  auto* t = app.add_subcommand("tcspanner", "Approximate (s, d)-TC spanner of a DAG");
  for (auto [cmd, o] : {std::pair{s, &sc}, std::pair{t, &sp}}) {
    cmd->add_option("--graph", o->graph, "Input edge-list file")->required();
    cmd->add_option("--s", o->s, "Size budget")->required();
    cmd->add_option("--d", o->d, "Target diameter")->required();
    cmd->add_option("--alpha-d", o->alpha_d, "Diameter slack");
    cmd->add_option("--seed", o->seed, "RNG seed");
    cmd->add_option("-o,--out", o->out, "Output edge file")->required();
    cmd->add_flag("--no-timing", o->no_timing, "Print ms as 0");
    cmd->add_option("--hub-samples", o->constants.hub_samples, "Hub sampling constant (default 9)");
    cmd->add_option("--chain-samples", o->constants.chain_samples, "Chain sampling constant (default 999)");
    cmd->add_option("--small-regime-log", o->constants.small_regime_log, "Small-regime threshold factor (default 4)");
    cmd->add_option("--thin-sampling", o->constants.thin_sampling, "Rounding probability constant (default 500)");
    cmd->add_option("--thin-size-cap", o->constants.thin_size_cap, "Rounded-set size constant (default 1000)");
  }
  s->add_option("--dump-pool", sc.dump_pool, "Write the certifying constraints here on infeasibility");

  std::string v_graph, v_edges, v_mode = "shortcut";
  std::size_t v_bound = 0;
  auto* v = app.add_subcommand("verify", "Check a shortcut or TC spanner");
  v->add_option("--graph", v_graph, "Input edge-list file")->required();
  v->add_option("--edges", v_edges, "Edge file to check")->required();
  v->add_option("--mode", v_mode, "shortcut or tcspanner");
  v->add_option("--D", v_bound, "Hop bound")->required();

  std::string b_suite, b_out;
  bool b_no_timing = false;
  auto* b = app.add_subcommand("bench", "Run a JSON suite and write CSV");
  b->add_option("--suite", b_suite, "Suite JSON")->required();
  b->add_option("-o,--out", b_out, "Output CSV")->required();
  b->add_flag("--no-timing", b_no_timing, "Write ms as 0");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadParams;
  }

  try {
    if (*g) return cmd_gen(gen);
    if (*s) return cmd_shortcut(sc);
    if (*t) return cmd_tcspanner(sp);
    if (*v) return cmd_verify(v_graph, v_edges, v_mode, v_bound);
    if (*b) return cmd_bench(b_suite, b_out, b_no_timing);
  } catch (const sf::InfeasibleError& e) {
    report_infeasible(e, sc.dump_pool);
    return kInfeasible;
  } catch (const sf::Error& e) {
    std::cerr << e.what() << "\n";
    return exit_for(e.code());
  }
  return kBadParams;
}
