#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>

#include "shortcut_forge/graph.hpp"
#include "shortcut_forge/thick.hpp"
#include "shortcut_forge/thin.hpp"

namespace shortcut_forge {

struct SolveParams {
  std::size_t s = 0;
  std::size_t d = 1;
  std::size_t alpha_d = 1;
  std::uint64_t seed = 0;
  // 0 selects SHORTCUT_FORGE_MAX_RETRIES when set, else 50.
  std::size_t max_retries = 0;
  Constants constants;

  std::size_t bound() const { return alpha_d * d; }
};

// Retry budget from SHORTCUT_FORGE_MAX_RETRIES, defaulting to 50.
std::size_t default_max_retries();

// n / (d sqrt(s alpha_d)) before clamping.
double raw_beta(std::size_t n, const SolveParams& p);
double clamped_beta(std::size_t n, const SolveParams& p);

// Hop bound from which the beta = 1 fallback replaces the main algorithm.
bool use_fallback(std::size_t n, const SolveParams& p);

// 1000 log^2 n (beta / alpha_d) s.
double thin_size_cap(std::size_t n, double beta, const SolveParams& p);

struct SolveReport {
  ShortcutSet shortcut;
  std::string regime;
  double beta = 1.0;
  std::size_t f1_size = 0;
  std::size_t f2_size = 0;
  double f1_cap = 0.0;
  double f2_cap = 0.0;
  // Thick resamples plus Cut-or-Round failures.
  std::size_t retries = 0;
  std::size_t thin_rounds = 0;
  std::size_t constraints = 0;
  std::size_t bound = 0;

  double cap() const { return f1_cap + f2_cap; }
  double alpha_s(std::size_t s) const { return s ? static_cast<double>(shortcut.size()) / static_cast<double>(s) : 0.0; }
};

// F1 ∪ F2 on a DAG, verified at alpha_d * d before returning.
SolveReport approx_shortcut_dag(const DiGraph& g, const SolveParams& p, const ThinObserver& observer = {});

struct SccReport {
  SolveReport condensed;
  ShortcutSet shortcut;
  std::size_t components = 0;
  std::size_t lifted = 0;
  std::size_t star_edges = 0;
  // Condensation edges lifted to representatives to restore the 3 alpha_d d
  // bound when the star detour alone overshoots it.
  std::size_t repair_edges = 0;
  std::size_t bound = 0;

  std::size_t overhead() const { return shortcut.size() - std::min(shortcut.size(), lifted); }
};

// Any digraph: solve on the SCC condensation, lift through component
// representatives, and add stars inside components. Verified at
// 3 alpha_d d.
SccReport approx_shortcut(const DiGraph& g, const SolveParams& p, const ThinObserver& observer = {});

struct SpannerReport {
  EdgeList spanner;
  std::size_t reduction_size = 0;
  SolveReport inner;
};

// Transitive reduction plus a shortcut of it. Throws PromiseViolated when
// the reduction alone exceeds s.
SpannerReport approx_tc_spanner(const DiGraph& g, const SolveParams& p);

// Shortcut read off a TC spanner computed with budget 2s. Requires s >= m.
ShortcutSet shortcut_from_tcspanner(const DiGraph& g, const SolveParams& p);

}  // namespace shortcut_forge
