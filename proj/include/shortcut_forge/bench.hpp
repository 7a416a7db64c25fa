#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "shortcut_forge/graph.hpp"
#include "shortcut_forge/pipeline.hpp"

namespace shortcut_forge {

// One grid cell. `d_rule` is a number, "half" (ceil(diam/2)) or "diam".
struct BenchCell {
  std::string kind = "random";
  std::size_t n = 0;
  double edge_factor = 2.0;
  std::size_t layers = 4;
  double s_factor = 1.0;
  std::string d_rule = "2";
  std::size_t alpha_d = 1;
  std::uint64_t seed = 0;
};

struct RunRecord {
  std::string graph;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t s = 0;
  std::size_t d = 0;
  std::size_t alpha_d = 0;
  std::size_t size = 0;
  double cap = 0.0;
  bool ok = false;
  std::string regime;
  std::size_t retries = 0;
  double ms = 0.0;
  std::uint64_t seed = 0;
  // Not part of the CSV.
  SolveReport report;
  std::string error;
};

// Expands a JSON suite into cells in a fixed order. Accepted keys: kinds,
// n, edge_factor, layers, s_factor, d, alpha_d, seeds (all lists except
// layers and s_factor).
std::vector<BenchCell> expand_suite(const std::string& json_text);

DiGraph bench_graph(const BenchCell& cell);
std::size_t resolve_d(const DiGraph& g, const std::string& rule);

// Runs the DAG solver and re-derives `ok` with the verifier.
RunRecord run_cell(const BenchCell& cell, const ThinObserver& observer = {});

const std::string& csv_header();
// `timing` false writes ms as 0 so reruns are byte-identical.
std::string to_csv(const RunRecord& r, bool timing = true);

}  // namespace shortcut_forge
