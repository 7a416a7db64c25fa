#include "shortcut_forge/bench.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "shortcut_forge/generators.hpp"

namespace shortcut_forge {

namespace {

template <typename T>
std::vector<T> list_or(const nlohmann::json& j, const char* key, std::vector<T> fallback) {
  if (!j.contains(key)) return fallback;
  const auto& v = j.at(key);
  if (!v.is_array()) return {v.get<T>()};
  return v.get<std::vector<T>>();
}

std::string format_number(double v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

}  // namespace

std::vector<BenchCell> expand_suite(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("suite: ") + e.what());
  }
  try {
    const auto kinds = list_or<std::string>(j, "kinds", {"random"});
    const auto ns = list_or<std::size_t>(j, "n", {20});
    const auto factors = list_or<double>(j, "edge_factor", {2.0});
    const auto alphas = list_or<std::size_t>(j, "alpha_d", {1});
    const auto seeds = list_or<std::uint64_t>(j, "seeds", {0});
    std::vector<std::string> d_rules;
    if (j.contains("d")) {
      for (const auto& v : j.at("d")) d_rules.push_back(v.is_string() ? v.get<std::string>() : std::to_string(v.get<std::size_t>()));
    } else {
      d_rules = {"2"};
    }
    const std::size_t layers = j.value("layers", std::size_t{4});
    const double s_factor = j.value("s_factor", 1.0);

    std::vector<BenchCell> cells;
    for (const auto& kind : kinds)
      for (std::size_t n : ns)
        for (double f : factors)
          for (const auto& d : d_rules)
            for (std::size_t a : alphas)
              for (std::uint64_t seed : seeds) cells.push_back({kind, n, f, layers, s_factor, d, a, seed});
    return cells;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("suite: ") + e.what());
  }
}

DiGraph bench_graph(const BenchCell& cell) {
  const double p = cell.n ? std::min(1.0, cell.edge_factor / static_cast<double>(cell.n)) : 0.0;
  if (cell.kind == "random") return gen_random_dag(cell.n, p, cell.seed);
  if (cell.kind == "path") return gen_path(cell.n);
  if (cell.kind == "layered") {
    // Per-pair probability scaled so the expected degree matches edge_factor.
    const double width = static_cast<double>(cell.n) / static_cast<double>(std::max<std::size_t>(cell.layers, 1));
    return gen_layered(cell.n, cell.layers, std::min(1.0, cell.edge_factor / std::max(1.0, width)), cell.seed);
  }
  throw Error(ErrorCode::BadParams, "unknown graph kind '" + cell.kind + "'");
}

std::size_t resolve_d(const DiGraph& g, const std::string& rule) {
  const std::size_t diam = std::max<std::size_t>(diameter(g), 1);
  if (rule == "diam") return diam;
  if (rule == "half") return (diam + 1) / 2;
  try {
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(rule, &pos);
    if (pos == rule.size() && v >= 1) return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::BadParams, "bad d rule '" + rule + "'");
}

RunRecord run_cell(const BenchCell& cell, const ThinObserver& observer) {
  const DiGraph g = bench_graph(cell);
  RunRecord r;
  r.graph = cell.kind + "_n" + std::to_string(cell.n) + "_f" + format_number(cell.edge_factor) + "_g" +
            std::to_string(cell.seed);
  r.n = g.num_vertices();
  r.m = g.num_edges();
  r.s = static_cast<std::size_t>(std::ceil(cell.s_factor * static_cast<double>(r.n)));
  r.d = resolve_d(g, cell.d_rule);
  r.alpha_d = cell.alpha_d;
  r.seed = cell.seed;

  SolveParams p;
  p.s = r.s;
  p.d = r.d;
  p.alpha_d = r.alpha_d;
  p.seed = cell.seed;
  const auto start = std::chrono::steady_clock::now();
  try {
    r.report = approx_shortcut_dag(g, p, observer);
    r.size = r.report.shortcut.size();
    r.cap = r.report.cap();
    r.regime = r.report.regime;
    r.retries = r.report.retries;
    r.ok = verify_shortcut(g, r.report.shortcut, p.bound()).valid;
  } catch (const Error& e) {
    r.error = e.what();
    r.regime = std::string(to_string(e.code()));
    r.ok = false;
  }
  r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

const std::string& csv_header() {
  static const std::string header = "graph,n,m,s,d,alpha_d,size,cap,ok,regime,retries,ms,seed";
  return header;
}

std::string to_csv(const RunRecord& r, bool timing) {
  char cap[64];
  std::snprintf(cap, sizeof cap, "%.0f", std::floor(r.cap));
  char ms[32];
  std::snprintf(ms, sizeof ms, "%.3f", timing ? r.ms : 0.0);
  std::ostringstream out;
  out << r.graph << "," << r.n << "," << r.m << "," << r.s << "," << r.d << "," << r.alpha_d << "," << r.size << ","
      << cap << "," << (r.ok ? 1 : 0) << "," << r.regime << "," << r.retries << "," << ms << "," << r.seed;
  return out.str();
}

}  // namespace shortcut_forge
