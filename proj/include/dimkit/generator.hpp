#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dimkit/coloring.hpp"
#include "dimkit/graph.hpp"

namespace dimkit {

/// Seeded source used by every generator. Draws go through rng() and
/// modular reduction only, so output is the same on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t operator()() { return engine_(); }
  /// Uniform-ish integer in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
  /// True with probability p (53-bit resolution).
  bool chance(double p) { return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p; }
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

enum class P9Label { Verified, Violated, Unchecked };

std::string_view p9_label_name(P9Label l);

struct PlantedInstance {
  Graph graph;
  Matching planted;
  std::uint64_t seed = 0;
  P9Label p9_free = P9Label::Unchecked;
};

/// 2k Black vertices paired into M, n - 2k White vertices each hung on a
/// random Black one, `extra` further White-Black edges, then White-Black
/// edges joining the components when `connect` is set (impossible only when
/// there are no White vertices and k > 1). Throws std::invalid_argument on
/// infeasible parameters.
PlantedInstance gen_planted(int n, int k, int extra, std::uint64_t seed, bool connect = true,
                            bool check_p9 = true);

struct RandomFilters {
  bool k4_free = false;
  bool diamond_butterfly_free = false;
  bool p9_free = false;
};

struct RandomDraw {
  std::optional<Graph> graph;  // empty when every attempt was rejected
  int attempts = 0;
  std::string rejection;       // filter that failed last
};

/// G(n, p) samples until the filters pass or `max_attempts` draws are spent.
RandomDraw gen_random(int n, double p, std::uint64_t seed, RandomFilters filters = {},
                      int max_attempts = 1000);

/// Canonical relabelling: colour refinement, then the permutation inside the
/// refined cells with the smallest upper-triangle adjacency code.
Graph canonical_form(const Graph& g);

/// One representative per isomorphism class on 1..max_n vertices (max_n <= 10),
/// ordered by vertex count, then by canonical code.
std::vector<Graph> small_graphs(int max_n, bool connected_only);

struct CorpusEntry {
  Graph graph;
  bool dim = false;  // oracle label
  bool p9_free = true;
};

/// All connected graphs on 2..max_n vertices labelled by the oracle.
std::vector<CorpusEntry> emit_small_corpus(int max_n);

/// {"path","n","m","label","p9_free","seed"} on one line.
std::string manifest_line(const std::string& path, const Graph& g, const std::string& label,
                          P9Label p9, std::uint64_t seed);

}  // namespace dimkit
