#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <vector>

#include "shortcut_forge/graph.hpp"
#include "shortcut_forge/thick.hpp"

namespace shortcut_forge {

// A set of closure edges, disjoint from E, whose removal from E^T leaves
// no witness.from -> witness.to path of at most `bound` hops.
struct CriticalSet {
  EdgeList edges;
  Edge witness;
  std::size_t bound = 0;
};

// A point of the covering relaxation: one value per candidate edge of
// E^T \ E, aligned with `candidates`.
struct FractionalSolution {
  EdgeList candidates;
  std::vector<double> values;
  double budget = 0.0;

  double value(Edge e) const;
  double mass(const EdgeList& edges) const;
  double total() const;
};

bool is_critical(const DiGraph& g, const EdgeList& removed, Vertex u, Vertex v, std::size_t k);

// True iff `set` is critical for its witness, avoids E, and dropping any
// single edge breaks criticality.
bool is_minimal_critical(const DiGraph& g, const CriticalSet& set);

// A minimal k-critical set for (u,v) avoiding E and `protected_edges`.
// Requires the distance from u to v in E ∪ protected_edges to exceed k.
CriticalSet minimal_critical_set(const DiGraph& g, Vertex u, Vertex v, std::size_t k,
                                 const EdgeList& protected_edges);

// Turns an (alpha_d * d)-critical set of mass below alpha_d / 9 into a
// minimal d-critical subset of mass below 1. For alpha_d >= 3 and d >= 2
// this cuts the shortest-path layers from the witness source into batches
// of 2d layers and keeps the lightest batch; smaller parameters use the
// direct reductions described in the README.
CriticalSet decompose_critical(const DiGraph& g, const CriticalSet& wide, const FractionalSolution& x,
                               std::size_t d, std::size_t alpha_d);

// Pool of covering constraints; every insert is revalidated.
class ConstraintPool {
 public:
  explicit ConstraintPool(const DiGraph& g) : g_(&g) {}

  // Throws PreconditionViolated when `set` is not a minimal critical set.
  void add(CriticalSet set);
  const std::vector<CriticalSet>& constraints() const { return constraints_; }
  std::size_t size() const { return constraints_.size(); }

  // One constraint per line: `k u v : a,b c,d ...`.
  void dump(std::ostream& out) const;

 private:
  const DiGraph* g_;
  std::vector<CriticalSet> constraints_;
};

// Minimizes total mass subject to every pooled constraint; nullopt when
// that minimum exceeds `budget` (no d-shortcut of that size exists).
std::optional<FractionalSolution> lp_feasible(const std::vector<CriticalSet>& pool, const EdgeList& candidates,
                                              double budget);

struct ThinParams {
  std::size_t s = 0;
  std::size_t d = 1;
  std::size_t alpha_d = 1;
  double beta = 1.0;
  std::uint64_t seed = 0;
  std::size_t max_retries = 50;
  // Constraint additions allowed before IterationCapExceeded; 0 means 4n^2.
  std::size_t iteration_cap = 0;
  Constants constants;

  std::size_t bound() const { return alpha_d * d; }
};

struct CutOrRoundResult {
  enum class Kind { Rounded, Violated, Fail };

  Kind kind = Kind::Fail;
  EdgeList f2;
  // Violated only: the wide (alpha_d * d)-critical set extracted from F2
  // and the d-critical constraint derived from it.
  std::optional<CriticalSet> wide;
  std::optional<CriticalSet> violated;
  std::optional<Edge> unsettled;
};

CutOrRoundResult cut_or_round(const DiGraph& g, const FractionalSolution& x, const PairSet& thin,
                              const ThinParams& params, std::uint64_t stream_seed);

struct CutOrRoundTrace {
  const FractionalSolution& x;
  const CutOrRoundResult& result;
};

struct ThinResult {
  ShortcutSet f2;
  std::vector<CriticalSet> pool;
  PairSet thin;
  std::size_t rounds = 0;
  std::size_t fails = 0;
  double lp_value = 0.0;
};

class InfeasibleError : public Error {
 public:
  InfeasibleError(std::vector<CriticalSet> certificate, double lp_value, double budget);

  const std::vector<CriticalSet>& certificate() const { return certificate_; }
  double lp_value() const { return lp_value_; }
  double budget() const { return budget_; }

 private:
  std::vector<CriticalSet> certificate_;
  double lp_value_;
  double budget_;
};

using ThinObserver = std::function<void(const CutOrRoundTrace&)>;

// Cutting-plane loop settling every beta-thin pair within alpha_d * d hops.
ThinResult settle_thin(const DiGraph& g, const ThinParams& params, const ThinObserver& observer = {});

}  // namespace shortcut_forge
