#include "dimkit/coloring.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dimkit {

char color_char(Color c) {
  switch (c) {
    case Color::White: return 'W';
    case Color::Black: return 'B';
    default: return '?';
  }
}

void Matching::normalize() { std::sort(edges.begin(), edges.end()); }

bool Matching::vertex_disjoint() const {
  std::vector<Vertex> vs;
  for (const Edge& e : edges) {
    vs.push_back(e.u);
    vs.push_back(e.v);
  }
  std::sort(vs.begin(), vs.end());
  return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
}

Matching parse_matching(std::string_view text, const Graph& g) {
  Matching m;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line[0] == '#') continue;
    std::istringstream ls(line);
    long long a = 0, b = 0;
    if (!(ls >> a)) continue;  // blank line
    std::string rest;
    if (!(ls >> b) || (ls >> rest)) throw ParseError(lineno, "expected \"u v\"");
    if (a < 0 || b < 0 || a >= g.n() || b >= g.n()) throw ParseError(lineno, "vertex id out of range");
    Edge e(static_cast<Vertex>(a), static_cast<Vertex>(b));
    if (!g.has_edge(e.u, e.v))
      throw ParseError(lineno, "(" + std::to_string(a) + "," + std::to_string(b) + ") is not an edge");
    if (std::find(m.edges.begin(), m.edges.end(), e) != m.edges.end())
      throw ParseError(lineno, "edge listed twice");
    m.edges.push_back(e);
  }
  m.normalize();
  return m;
}

Matching read_matching_file(const std::string& path, const Graph& g) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_matching(buf.str(), g);
}

std::string serialize_matching(const Matching& m) {
  std::ostringstream out;
  for (const Edge& e : m.edges) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string_view rule_name(ContradictionRule r) {
  switch (r) {
    case ContradictionRule::WhiteWhiteEdge: return "white-white-edge";
    case ContradictionRule::TooManyBlack: return "black-with-two-black-neighbours";
    case ContradictionRule::NoMate: return "black-without-mate";
    case ContradictionRule::BarredMate: return "black-pair-on-excluded-edge";
    case ContradictionRule::ColorConflict: return "color-conflict";
  }
  return "unknown";
}

std::string Contradiction::describe() const {
  std::string s(rule_name(rule));
  s += " at";
  for (Vertex v : witnesses) s += " " + std::to_string(v);
  return s;
}

Coloring::Coloring(int n)
    : color_(static_cast<std::size_t>(n), Color::Unknown),
      mate_(static_cast<std::size_t>(n), kNoVertex) {}

std::size_t Coloring::count(Color c) const {
  return static_cast<std::size_t>(std::count(color_.begin(), color_.end(), c));
}

VertexSet Coloring::members(Color c) const {
  VertexSet s(color_.size());
  for (std::size_t v = 0; v < color_.size(); ++v)
    if (color_[v] == c) s.insert(static_cast<Vertex>(v));
  return s;
}

std::optional<Contradiction> assign(Coloring& c, Vertex v, Color color) {
  if (c.color_[v] == color) return std::nullopt;
  if (c.color_[v] != Color::Unknown)
    return Contradiction{ContradictionRule::ColorConflict, {v}};
  c.color_[v] = color;
  c.dirty_.push_back(v);
  return std::nullopt;
}

class Propagator {
 public:
  Propagator(const Graph& g, Coloring& c) : g_(g), c_(c) {}

  std::optional<Contradiction> run() {
    while (!c_.dirty_.empty()) {
      Vertex v = c_.dirty_.front();
      c_.dirty_.pop_front();
      if (auto k = examine(v)) return fail(*k);
      for (Vertex w : g_.neighbors(v))
        if (auto k = examine(w)) return fail(*k);
    }
    return std::nullopt;
  }

 private:
  std::optional<Contradiction> fail(Contradiction k) {
    c_.dirty_.clear();
    return k;
  }

  std::optional<Contradiction> examine(Vertex v) {
    switch (c_.color_[v]) {
      case Color::White: return examine_white(v);
      case Color::Black: return examine_black(v);
      default: return examine_unknown(v);
    }
  }

  std::optional<Contradiction> examine_white(Vertex v) {
    for (Vertex w : g_.neighbors(v)) {
      if (c_.color_[w] == Color::White) return Contradiction{ContradictionRule::WhiteWhiteEdge, {v, w}};
      if (c_.color_[w] == Color::Unknown)
        if (auto k = assign(c_, w, Color::Black)) return k;
    }
    return std::nullopt;
  }

  std::optional<Contradiction> examine_black(Vertex v) {
    Vertex b1 = kNoVertex;
    for (Vertex w : g_.neighbors(v)) {
      if (c_.color_[w] != Color::Black) continue;
      if (b1 != kNoVertex) return Contradiction{ContradictionRule::TooManyBlack, {v, b1, w}};
      b1 = w;
    }
    if (b1 != kNoVertex) {
      if (!c_.mate_allowed(v, b1)) return Contradiction{ContradictionRule::BarredMate, {v, b1}};
      if (c_.mate_[v] == kNoVertex) {
        if (c_.mate_[b1] != kNoVertex && c_.mate_[b1] != v)
          return Contradiction{ContradictionRule::TooManyBlack, {b1, v, c_.mate_[b1]}};
        c_.mate_[v] = b1;
        c_.mate_[b1] = v;
        c_.dirty_.push_back(b1);
      }
      for (Vertex w : g_.neighbors(v))
        if (c_.color_[w] == Color::Unknown)
          if (auto k = assign(c_, w, Color::White)) return k;
      return std::nullopt;
    }
    int candidates = 0;
    Vertex last = kNoVertex;
    for (Vertex w : g_.neighbors(v)) {
      if (c_.color_[w] != Color::Unknown) continue;
      if (!c_.mate_allowed(v, w)) {
        if (auto k = assign(c_, w, Color::White)) return k;
        continue;
      }
      ++candidates;
      last = w;
    }
    if (candidates == 0) return Contradiction{ContradictionRule::NoMate, {v}};
    if (candidates == 1) return assign(c_, last, Color::Black);
    return std::nullopt;
  }

  std::optional<Contradiction> examine_unknown(Vertex v) {
    int blacks = 0;
    Vertex b = kNoVertex;
    bool open_candidate = false;
    for (Vertex w : g_.neighbors(v)) {
      if (c_.color_[w] == Color::Black) {
        ++blacks;
        b = w;
      } else if (c_.color_[w] == Color::Unknown && c_.mate_allowed(v, w)) {
        open_candidate = true;
      }
    }
    bool can_black = false;
    if (blacks == 0) can_black = open_candidate;
    else if (blacks == 1) can_black = c_.mate_allowed(v, b) && c_.mate_[b] == kNoVertex;
    if (!can_black) return assign(c_, v, Color::White);
    return std::nullopt;
  }

  const Graph& g_;
  Coloring& c_;
};

std::optional<Contradiction> propagate(const Graph& g, Coloring& c) { return Propagator(g, c).run(); }

std::optional<Contradiction> assign_and_propagate(const Graph& g, Coloring& c, Vertex v, Color color) {
  if (auto k = assign(c, v, color)) return k;
  return propagate(g, c);
}

std::optional<Contradiction> force_edge(const Graph& g, Coloring& c, Edge e) {
  if (auto k = assign(c, e.u, Color::Black)) return k;
  if (auto k = assign(c, e.v, Color::Black)) return k;
  if (auto k = propagate(g, c)) return k;
  if (c.mate(e.u) != e.v) return Contradiction{ContradictionRule::TooManyBlack, {e.u, e.v}};
  return std::nullopt;
}

bool is_complete_feasible(const Graph& g, const Coloring& c, const VertexSet& scope) {
  bool ok = true;
  scope.for_each([&](Vertex v) {
    if (!ok) return;
    switch (c.color(v)) {
      case Color::Unknown: ok = false; break;
      case Color::White:
        for (Vertex w : g.neighbors(v))
          if (c.white(w)) ok = false;
        break;
      case Color::Black: {
        int blacks = 0;
        for (Vertex w : g.neighbors(v)) blacks += c.black(w) ? 1 : 0;
        if (blacks != 1) ok = false;
        break;
      }
    }
  });
  return ok;
}

bool is_complete_feasible(const Graph& g, const Coloring& c) {
  return is_complete_feasible(g, c, g.all());
}

Matching extract_matching(const Graph& g, const Coloring& c) {
  if (!is_complete_feasible(g, c))
    throw std::logic_error("extract_matching: coloring is not complete and feasible");
  Matching m;
  for (const Edge& e : g.edges())
    if (c.black(e.u) && c.black(e.v)) m.edges.push_back(e);
  return m;
}

Coloring coloring_of(const Graph& g, const Matching& m) {
  Coloring c(g.n());
  std::fill(c.color_.begin(), c.color_.end(), Color::White);
  for (const Edge& e : m.edges) {
    c.color_[e.u] = c.color_[e.v] = Color::Black;
    c.mate_[e.u] = e.v;
    c.mate_[e.v] = e.u;
  }
  return c;
}

}  // namespace dimkit
