#pragma once

#include <array>
#include <cstdint>
#include <deque>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dimkit/graph.hpp"

namespace dimkit {

enum class Color : std::uint8_t { Unknown, White, Black };

char color_char(Color c);

/// Set of vertex-disjoint edges. `certified` is set only after the d.i.m.
/// verifier has accepted it for a specific graph.
struct Matching {
  std::vector<Edge> edges;
  bool certified = false;

  std::size_t size() const { return edges.size(); }
  void normalize();
  bool vertex_disjoint() const;
};

Matching parse_matching(std::string_view text, const Graph& g);
Matching read_matching_file(const std::string& path, const Graph& g);
std::string serialize_matching(const Matching& m);

/// Zone-based restriction on which edges may join two Black vertices.
/// `barred[a]` bit b set means no M-edge runs between zone a and zone b.
struct MateRestriction {
  static constexpr int kZones = 16;
  std::vector<std::uint8_t> zone;
  std::array<std::uint16_t, kZones> barred{};

  void bar(int a, int b) {
    barred[a] |= static_cast<std::uint16_t>(1U << b);
    barred[b] |= static_cast<std::uint16_t>(1U << a);
  }
  bool allows(Vertex u, Vertex v) const { return !((barred[zone[u]] >> zone[v]) & 1U); }
};

enum class ContradictionRule : std::uint8_t {
  WhiteWhiteEdge,      // two adjacent White vertices
  TooManyBlack,        // a Black vertex with two Black neighbours
  NoMate,              // a Black vertex that can no longer get a Black neighbour
  BarredMate,          // two adjacent Black vertices on an edge that cannot be in M
  ColorConflict,       // assigning the opposite color to a colored vertex
};

std::string_view rule_name(ContradictionRule r);

struct Contradiction {
  ContradictionRule rule = ContradictionRule::ColorConflict;
  std::vector<Vertex> witnesses;

  std::string describe() const;
};

/// Partial black/white coloring with mate tracking. Single owner; copy to
/// branch.
class Coloring {
 public:
  Coloring() = default;
  explicit Coloring(int n);

  int n() const { return static_cast<int>(color_.size()); }
  Color color(Vertex v) const { return color_[v]; }
  Vertex mate(Vertex v) const { return mate_[v]; }
  bool unknown(Vertex v) const { return color_[v] == Color::Unknown; }
  bool black(Vertex v) const { return color_[v] == Color::Black; }
  bool white(Vertex v) const { return color_[v] == Color::White; }

  std::size_t count(Color c) const;
  VertexSet members(Color c) const;
  bool pending() const { return !dirty_.empty(); }
  /// Queues v for re-examination by the next propagate().
  void touch(Vertex v) { dirty_.push_back(v); }

  /// Restricts which adjacent Black pairs may be mates. Pass nullptr to lift.
  void restrict_mates(std::shared_ptr<const MateRestriction> r) { restriction_ = std::move(r); }
  bool mate_allowed(Vertex u, Vertex v) const { return !restriction_ || restriction_->allows(u, v); }
  const MateRestriction* restriction() const { return restriction_.get(); }

  /// Unknown, or Black with no mate yet.
  bool live(Vertex v) const {
    return color_[v] == Color::Unknown || (color_[v] == Color::Black && mate_[v] == kNoVertex);
  }

  friend std::optional<Contradiction> assign(Coloring& c, Vertex v, Color color);
  friend std::optional<Contradiction> propagate(const Graph& g, Coloring& c);
  friend class Propagator;
  friend Coloring coloring_of(const Graph& g, const Matching& m);

 private:
  std::vector<Color> color_;
  std::vector<Vertex> mate_;
  std::deque<Vertex> dirty_;
  std::shared_ptr<const MateRestriction> restriction_;
};

/// Sets a color without propagating; conflicting with an existing color is
/// a contradiction.
std::optional<Contradiction> assign(Coloring& c, Vertex v, Color color);

/// Runs the inference rules to a fixpoint:
///  - a White vertex makes all its neighbours Black;
///  - a Black vertex with a Black neighbour w takes w as mate, and every
///    other neighbour of either becomes White;
///  - a Black vertex whose only remaining mate candidate is one Unknown
///    neighbour makes that neighbour Black;
///  - a Black vertex makes White every neighbour it may not be matched with;
///  - an Unknown vertex that cannot become Black (two Black neighbours, or no
///    possible mate) becomes White.
/// Returns the first contradiction met, or nullopt at a consistent fixpoint.
std::optional<Contradiction> propagate(const Graph& g, Coloring& c);

std::optional<Contradiction> assign_and_propagate(const Graph& g, Coloring& c, Vertex v,
                                                  Color color);

/// Forces both ends of `e` Black (they become mates) and propagates.
std::optional<Contradiction> force_edge(const Graph& g, Coloring& c, Edge e);

/// No Unknown left, White set independent, every Black vertex has exactly
/// one Black neighbour.
bool is_complete_feasible(const Graph& g, const Coloring& c);

/// Same check restricted to the vertices of `scope` (their neighbourhoods are
/// inspected in full).
bool is_complete_feasible(const Graph& g, const Coloring& c, const VertexSet& scope);

/// Black-Black edges of a complete feasible coloring. Throws
/// std::logic_error when the coloring is not complete feasible.
Matching extract_matching(const Graph& g, const Coloring& c);

/// The coloring induced by a matching: V(M) Black, everything else White.
Coloring coloring_of(const Graph& g, const Matching& m);

}  // namespace dimkit
