#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "dimkit/coloring.hpp"
#include "dimkit/graph.hpp"

namespace dimkit {

struct VerifyResult {
  bool ok = false;
  std::string reason;  // empty when ok

  explicit operator bool() const { return ok; }
};

/// Checks the definition directly: M is an induced matching and every edge
/// of g shares a vertex with exactly one M-edge. Throws std::invalid_argument
/// if M names a pair that is not an edge of g.
VerifyResult verify_dim(const Graph& g, const Matching& m);

struct OracleReport {
  std::optional<Matching> found;
  std::optional<std::uint64_t> count;
  std::uint64_t explored = 0;
  bool limit_hit = false;
};

inline constexpr std::uint64_t kDefaultOracleLimit = 50'000'000;

/// Exhaustive include/exclude search over the edges in lexicographic order.
/// `found` is the first d.i.m. met; with limit_hit false and no `found` the
/// graph has none.
OracleReport oracle_dim(const Graph& g, std::uint64_t limit = kDefaultOracleLimit);

/// Number of d.i.m.s (the empty matching counts once for edgeless graphs).
OracleReport count_dims(const Graph& g, std::uint64_t limit = kDefaultOracleLimit);

/// Calls `visit` with every d.i.m. in search order; stop early by returning
/// false. Returns the report of the (possibly partial) search.
OracleReport enumerate_dims(const Graph& g, const std::function<bool(const Matching&)>& visit,
                            std::uint64_t limit = kDefaultOracleLimit);

}  // namespace dimkit
