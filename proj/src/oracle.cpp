#include "dimkit/oracle.hpp"

#include <stdexcept>
#include <vector>

namespace dimkit {

namespace {

std::string edge_text(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

VerifyResult verify_dim(const Graph& g, const Matching& m) {
  const auto n = static_cast<std::size_t>(g.n());
  std::vector<int> owner(n, -1);  // index of the M-edge covering a vertex
  for (std::size_t i = 0; i < m.edges.size(); ++i) {
    const Edge& e = m.edges[i];
    if (e.u < 0 || e.v >= g.n() || e.u == e.v || !g.has_edge(e.u, e.v))
      throw std::invalid_argument("matching edge " + edge_text(e.u, e.v) + " is not in the graph");
    for (Vertex w : {e.u, e.v}) {
      if (owner[w] >= 0)
        return {false, "vertex " + std::to_string(w) + " lies on two matching edges"};
      owner[w] = static_cast<int>(i);
    }
  }
  for (const Edge& e : g.edges()) {
    int a = owner[e.u], b = owner[e.v];
    if (a >= 0 && b >= 0 && a != b)
      return {false, "edge " + edge_text(e.u, e.v) + " joins two matching edges"};
    if (a < 0 && b < 0) return {false, "edge " + edge_text(e.u, e.v) + " is not dominated"};
  }
  return {true, {}};
}

namespace {

class EdgeSearch {
 public:
  EdgeSearch(const Graph& g, std::uint64_t limit,
             const std::function<bool(const Matching&)>& visit)
      : g_(g),
        edges_(g.edges()),
        limit_(limit),
        visit_(visit),
        in_m_(static_cast<std::size_t>(g.n()), 0),
        near_m_(static_cast<std::size_t>(g.n()), 0),
        last_edge_(static_cast<std::size_t>(g.n()), -1) {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      last_edge_[edges_[i].u] = static_cast<int>(i);
      last_edge_[edges_[i].v] = static_cast<int>(i);
    }
  }

  OracleReport run() {
    rec(0);
    report_.limit_hit = aborted_ && !stopped_;
    return report_;
  }

 private:
  // v can still turn black: it is free, has no matched neighbour, and an
  // undecided edge still touches it.
  bool may_turn_black(Vertex v, std::size_t i) const {
    return !near_m_[v] && last_edge_[v] >= static_cast<int>(i);
  }

  bool hopeless(std::size_t i) const {
    for (std::size_t j = 0; j < i; ++j) {
      const Edge& e = edges_[j];
      if (in_m_[e.u] || in_m_[e.v]) continue;
      if (!may_turn_black(e.u, i) && !may_turn_black(e.v, i)) return true;
    }
    return false;
  }

  void toggle(const Edge& e, int delta) {
    in_m_[e.u] += delta;
    in_m_[e.v] += delta;
    for (Vertex w : {e.u, e.v})
      for (Vertex z : g_.neighbors(w)) near_m_[z] += delta;
  }

  bool can_take(const Edge& e) const {
    // near_m_ counts matched neighbours; the edge's own endpoints are free
    return !in_m_[e.u] && !in_m_[e.v] && !near_m_[e.u] && !near_m_[e.v];
  }

  void rec(std::size_t i) {
    if (aborted_) return;
    if (++report_.explored > limit_) {
      aborted_ = true;
      return;
    }
    if (hopeless(i)) return;
    if (i == edges_.size()) {
      Matching m;
      m.edges = chosen_;
      m.certified = true;
      report_.count = report_.count.value_or(0) + 1;
      if (!report_.found) report_.found = m;
      if (!visit_(m)) {
        aborted_ = true;
        stopped_ = true;
      }
      return;
    }
    const Edge& e = edges_[i];
    if (can_take(e)) {
      toggle(e, 1);
      chosen_.push_back(e);
      rec(i + 1);
      chosen_.pop_back();
      toggle(e, -1);
    }
    rec(i + 1);
  }

  const Graph& g_;
  std::vector<Edge> edges_;
  std::uint64_t limit_;
  const std::function<bool(const Matching&)>& visit_;
  std::vector<int> in_m_;
  std::vector<int> near_m_;
  std::vector<int> last_edge_;
  std::vector<Edge> chosen_;
  OracleReport report_;
  bool aborted_ = false;
  bool stopped_ = false;
};

}  // namespace

OracleReport enumerate_dims(const Graph& g, const std::function<bool(const Matching&)>& visit,
                            std::uint64_t limit) {
  OracleReport r = EdgeSearch(g, limit, visit).run();
  if (r.limit_hit) r.count.reset();
  return r;
}

OracleReport oracle_dim(const Graph& g, std::uint64_t limit) {
  OracleReport r = EdgeSearch(g, limit, [](const Matching&) { return false; }).run();
  r.count.reset();
  return r;
}

OracleReport count_dims(const Graph& g, std::uint64_t limit) {
  OracleReport r = enumerate_dims(g, [](const Matching&) { return true; }, limit);
  if (!r.limit_hit && !r.count) r.count = 0;
  return r;
}

}  // namespace dimkit
