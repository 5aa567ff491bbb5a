#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dimkit/coloring.hpp"
#include "dimkit/decomposition.hpp"
#include "dimkit/graph.hpp"

namespace dimkit {

struct SolveConfig {
  bool check_p9 = false;
  std::uint64_t branch_budget = 0;  // 0: |scope|^2 per component
  std::uint64_t seed_budget = 0;    // 0: max(3, largest family)
  int oracle_max_n = 18;            // exhaustive fallback for Inconclusive
  bool deterministic = false;       // report 0 ms so reports compare byte for byte
  bool wlog = true;                 // in-vertex twin pruning
  bool trace = false;               // keep a human-readable log in the outcome
};

enum class SolveStatus { Dim, NoDim, Inconclusive };

std::string_view status_name(SolveStatus s);

struct SolveStats {
  std::uint64_t edges_tried = 0;
  std::uint64_t forced_edges = 0;
  std::uint64_t branches = 0;
  std::int64_t millis = 0;
};

struct SolveOutcome {
  SolveStatus status = SolveStatus::Inconclusive;
  Matching matching;
  std::string reason;  // empty for a plain Dim
  SolveStats stats;
  bool p9_checked = false;
  std::vector<std::string> log;  // only with SolveConfig::trace
};

/// The empty matching for edgeless graphs, else the first single edge that
/// is a d.i.m. on its own.
std::optional<Matching> trivial_dim(const Graph& g);

struct Preprocessed {
  bool no_dim = false;
  std::string reason;
  Coloring base;
  std::vector<Edge> forced;
};

/// K4 gives no d.i.m.; diamond mid-edges and butterfly peripheral edges are
/// forced into every d.i.m. and propagated.
Preprocessed preprocess_global(const Graph& g);

struct EdgeTrial {
  enum class Status { Colored, InfeasibleForXy, BudgetExceeded };
  Status status = Status::InfeasibleForXy;
  Coloring coloring;         // completion on the scope, restriction lifted
  std::optional<Matching> matching;  // when the completion covers all of g
  std::vector<Fact> facts;
  std::string reason;
  std::uint64_t branches = 0;
  bool extended = false;     // levels beyond 4 were needed
};

/// Is there a completion of `base` on `scope` (a connected set of live
/// vertices) that puts xy into the matching? With `p9_free_scope` the rules
/// that rely on a P9-free, (K4, diamond, butterfly)-free scope are enabled.
EdgeTrial try_edge(const Graph& g, Edge xy, const Coloring& base, const VertexSet& scope,
                   const SolveConfig& cfg, bool p9_free_scope);

/// Scope = the live component holding xy. The P9-free rules are enabled with
/// cfg.check_p9 when that component is clean and xy meets its central vertex.
EdgeTrial try_edge(const Graph& g, Edge xy, const Coloring& base, const SolveConfig& cfg);

SolveOutcome solve(const Graph& g, const SolveConfig& cfg = {});

/// True iff out is Dim and its matching is a d.i.m. of g.
bool verify_outcome(const Graph& g, const SolveOutcome& out);

/// {"status","matching","reason","stats":{...},"p9_checked"} on one line.
std::string to_json(const SolveOutcome& out);

}  // namespace dimkit
