#include "dimkit/driver.hpp"

#include <algorithm>
#include <chrono>
#include <climits>
#include <stdexcept>

#include <json.hpp>

#include "dimkit/component_solver.hpp"
#include "dimkit/oracle.hpp"
#include "dimkit/patterns.hpp"

namespace dimkit {

std::string_view status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::Dim: return "dim";
    case SolveStatus::NoDim: return "no-dim";
    case SolveStatus::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::optional<Matching> trivial_dim(const Graph& g) {
  Matching m;
  m.certified = true;
  if (g.m() == 0) return m;
  for (const Edge& e : g.edges()) {
    // every edge must touch e
    if (static_cast<std::size_t>(g.degree(e.u) + g.degree(e.v) - 1) != g.m()) continue;
    m.edges = {e};
    if (verify_dim(g, m)) return m;
  }
  return std::nullopt;
}

Preprocessed preprocess_global(const Graph& g) {
  Preprocessed p;
  p.base = Coloring(g.n());
  if (auto k4 = find_k4(g)) {
    p.no_dim = true;
    p.reason = "graph contains K4";
    return p;
  }
  for (const PatternHit& hit : scan_forced_patterns(g))
    for (const Edge& e : hit.forced_edges) {
      if (p.base.mate(e.u) == e.v) continue;
      p.forced.push_back(e);
      if (auto k = force_edge(g, p.base, e)) {
        p.no_dim = true;
        p.reason = std::string(hit.kind == PatternKind::Diamond ? "diamond mid-edge"
                                                                : "butterfly peripheral edge") +
                   " (" + std::to_string(e.u) + "," + std::to_string(e.v) + "): " + k->describe();
        return p;
      }
    }
  return p;
}

namespace {

bool lies_in_p3(const Graph& g, Edge xy, const VertexSet& scope) {
  for (Vertex a : {xy.u, xy.v})
    for (Vertex w : g.neighbors(a))
      if (w != xy.other(a) && scope.contains(w) && !g.has_edge(w, xy.other(a))) return true;
  return false;
}

std::uint64_t family_bound(const XyDecomposition& d) {
  std::uint64_t b = 3;
  for (const VertexSet& t : d.T) b = std::max<std::uint64_t>(b, t.count());
  return b;
}

}  // namespace

EdgeTrial try_edge(const Graph& g, Edge xy, const Coloring& base, const VertexSet& scope,
                   const SolveConfig& cfg, bool p9_free_scope) {
  EdgeTrial r;
  auto infeasible = [&](std::string why) {
    r.status = EdgeTrial::Status::InfeasibleForXy;
    r.reason = std::move(why);
    return r;
  };
  if (!base.live(xy.u) || !base.live(xy.v)) return infeasible("an end of the edge is settled");

  auto built = build_levels(g, xy.u, xy.v, base, scope, 4);
  if (std::holds_alternative<RadiusExceeded>(built)) {
    r.extended = true;
    built = build_levels(g, xy.u, xy.v, base, scope, INT_MAX);
  }
  XyDecomposition d = std::get<XyDecomposition>(std::move(built));
  d.wlog = cfg.wlog;
  d.p9_rules = p9_free_scope && !r.extended && lies_in_p3(g, xy, scope);

  NormalizeOutcome norm = apply_initial_facts(g, d);
  if (norm) norm = normalize_T(g, d);
  r.facts = d.facts;
  if (!norm) return infeasible(norm.reason);

  Coloring c = d.coloring;
  VertexSet live(static_cast<std::size_t>(g.n()));
  scope.for_each([&](Vertex v) {
    if (c.live(v)) live.insert(v);
  });
  const std::uint64_t sz = scope.count();
  for (const VertexSet& comp : connected_components(g, live)) {
    ComponentTask task;
    task.vertices = comp;
    task.branch_budget = cfg.branch_budget ? cfg.branch_budget : std::max<std::uint64_t>(sz * sz, 16);
    task.seed_budget = cfg.seed_budget ? cfg.seed_budget : family_bound(d);
    ComponentResult cr = enumerate_component_colorings(g, d, c, task);
    r.branches += cr.branches;
    r.facts.insert(r.facts.end(), cr.trace.begin(), cr.trace.end());
    if (cr.status == ComponentResult::Status::BudgetExceeded) {
      r.status = EdgeTrial::Status::BudgetExceeded;
      r.reason = cr.reason;
      return r;
    }
    if (cr.status == ComponentResult::Status::InfeasibleForXy) return infeasible(cr.reason);
    c = std::move(cr.completion);
  }

  c.restrict_mates(nullptr);
  if (!is_complete_feasible(g, c, scope))
    throw std::logic_error("try_edge: completion is not feasible on the scope");
  r.status = EdgeTrial::Status::Colored;
  if (is_complete_feasible(g, c)) {
    r.matching = extract_matching(g, c);
    if (!verify_dim(g, *r.matching))
      throw std::logic_error("try_edge: assembled matching fails verification");
    r.matching->certified = true;
  }
  r.coloring = std::move(c);
  return r;
}

namespace {

bool clean_scope(const Graph& g, const VertexSet& scope) {
  if (find_induced_path(g, 9, scope)) return false;
  Graph h = g.induced(scope.to_vector());
  return !find_k4(h) && scan_forced_patterns(h).empty();
}

}  // namespace

EdgeTrial try_edge(const Graph& g, Edge xy, const Coloring& base, const SolveConfig& cfg) {
  VertexSet live(static_cast<std::size_t>(g.n()));
  for (Vertex v = 0; v < g.n(); ++v)
    if (base.live(v)) live.insert(v);
  for (const VertexSet& comp : connected_components(g, live))
    if (comp.contains(xy.u) && comp.contains(xy.v)) {
      // the P9-free rules hold only for an edge at a central vertex
      Vertex x = central_vertex(g, comp).vertex;
      bool rooted = xy.u == x || xy.v == x;
      return try_edge(g, xy, base, comp, cfg, cfg.check_p9 && rooted && clean_scope(g, comp));
    }
  EdgeTrial r;
  r.reason = "an end of the edge is settled";
  return r;
}

namespace {

struct Part {
  SolveStatus status = SolveStatus::Inconclusive;
  Matching matching;
  std::string reason;
};

class ConnectedSolver {
 public:
  ConnectedSolver(const Graph& h, const std::vector<Vertex>& names, const SolveConfig& cfg,
                  SolveOutcome& out)
      : h_(h), names_(names), cfg_(cfg), out_(out) {}

  Part run() {
    if (auto m = trivial_dim(h_)) return {SolveStatus::Dim, *m, {}};
    Preprocessed pre = preprocess_global(h_);
    out_.stats.forced_edges += pre.forced.size();
    if (pre.no_dim && !pre.forced.empty()) {
      const Edge& e = pre.forced.back();
      return {SolveStatus::NoDim, {}, "forcing " + edge_name(e.u, e.v) + " contradicts"};
    }
    if (pre.no_dim) return {SolveStatus::NoDim, {}, pre.reason};
    if (cfg_.check_p9) has_p9_ = find_induced_path(h_, 9).has_value();
    definitive_ = !has_p9_;
    Part p = step_loop(std::move(pre.base));
    if (p.status == SolveStatus::NoDim && !definitive_) {
      p.status = SolveStatus::Inconclusive;
      p.reason = "graph contains an induced P9; " + p.reason;
    }
    return p;
  }

 private:
  std::string name(Vertex v) const { return std::to_string(names_[v]); }
  std::string edge_name(Vertex a, Vertex b) const { return "(" + name(a) + "," + name(b) + ")"; }

  void note(std::string line) {
    if (cfg_.trace) out_.log.push_back(std::move(line));
  }

  Part step_loop(Coloring c) {
    std::vector<VertexSet> work = live_components(c, h_.all());
    std::reverse(work.begin(), work.end());
    while (!work.empty()) {
      VertexSet comp = std::move(work.back());
      work.pop_back();
      Vertex x = central_vertex(h_, comp).vertex;
      bool clean = cfg_.check_p9 && !has_p9_ && clean_scope(h_, comp);
      bool done = false;
      std::string budget_reason;
      for (Vertex y : h_.neighbors(x)) {
        if (!comp.contains(y)) continue;
        ++out_.stats.edges_tried;
        EdgeTrial t = try_edge(h_, Edge(x, y), c, comp, cfg_, clean);
        out_.stats.branches += t.branches;
        note("edge " + edge_name(x, y) + ": " + trial_text(t));
        if (t.status == EdgeTrial::Status::Colored) {
          for (const Fact& f : t.facts)
            if (f.kind == FactKind::ForcedEdge) ++out_.stats.forced_edges;
          c = std::move(t.coloring);
          done = true;
          break;
        }
        if (t.status == EdgeTrial::Status::BudgetExceeded && budget_reason.empty())
          budget_reason = "edge " + edge_name(x, y) + ": " + t.reason;
      }
      if (done) continue;
      if (!budget_reason.empty()) return {SolveStatus::Inconclusive, {}, budget_reason};
      if (c.black(x))
        return {SolveStatus::NoDim, {}, "vertex " + name(x) + " has no feasible M-edge"};
      note("vertex " + name(x) + " white");
      if (auto k = assign_and_propagate(h_, c, x, Color::White))
        return {SolveStatus::NoDim, {},
                "whitening vertex " + name(x) + " fails: " + std::string(rule_name(k->rule))};
      auto rest = live_components(c, comp);
      work.insert(work.end(), rest.rbegin(), rest.rend());
    }
    if (!is_complete_feasible(h_, c))
      throw std::logic_error("solve: coloring incomplete after the vertex loop");
    return {SolveStatus::Dim, extract_matching(h_, c), {}};
  }

  std::vector<VertexSet> live_components(const Coloring& c, const VertexSet& within) const {
    VertexSet live(static_cast<std::size_t>(h_.n()));
    within.for_each([&](Vertex v) {
      if (c.live(v)) live.insert(v);
    });
    return connected_components(h_, live);
  }

  static std::string trial_text(const EdgeTrial& t) {
    switch (t.status) {
      case EdgeTrial::Status::Colored: return "colored";
      case EdgeTrial::Status::InfeasibleForXy: return "infeasible (" + t.reason + ")";
      case EdgeTrial::Status::BudgetExceeded: return "budget exceeded (" + t.reason + ")";
    }
    return {};
  }

  const Graph& h_;
  const std::vector<Vertex>& names_;
  const SolveConfig& cfg_;
  SolveOutcome& out_;
  bool has_p9_ = false;
  bool definitive_ = true;
};

}  // namespace

SolveOutcome solve(const Graph& g, const SolveConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  SolveOutcome out;
  out.p9_checked = cfg.check_p9;
  Matching all;
  std::string inconclusive;
  bool no_dim = false;

  for (const VertexSet& comp : connected_components(g)) {
    std::vector<Vertex> verts = comp.to_vector();
    if (verts.size() == 1) continue;
    Graph h = g.induced(verts);
    Part p = ConnectedSolver(h, verts, cfg, out).run();
    if (p.status == SolveStatus::Inconclusive && h.n() <= cfg.oracle_max_n) {
      OracleReport o = oracle_dim(h);
      if (!o.limit_hit) {
        if (cfg.trace) out.log.push_back("oracle decides: " + p.reason);
        p.status = o.found ? SolveStatus::Dim : SolveStatus::NoDim;
        p.reason = o.found ? "" : "exhaustive search finds no d.i.m. (" + p.reason + ")";
        if (o.found) p.matching = *o.found;
      }
    }
    if (p.status == SolveStatus::NoDim) {
      no_dim = true;
      out.reason = p.reason;
      break;
    }
    if (p.status == SolveStatus::Inconclusive) {
      if (inconclusive.empty())
        inconclusive = p.reason;
      continue;
    }
    for (const Edge& e : p.matching.edges) all.edges.emplace_back(verts[e.u], verts[e.v]);
  }

  if (no_dim) {
    out.status = SolveStatus::NoDim;
  } else if (!inconclusive.empty()) {
    out.status = SolveStatus::Inconclusive;
    out.reason = inconclusive;
  } else {
    all.normalize();
    VerifyResult v = verify_dim(g, all);
    if (!v) throw std::logic_error("solve: certificate fails verification: " + v.reason);
    all.certified = true;
    out.status = SolveStatus::Dim;
    out.matching = std::move(all);
  }
  if (!cfg.deterministic)
    out.stats.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
  return out;
}

bool verify_outcome(const Graph& g, const SolveOutcome& out) {
  if (out.status != SolveStatus::Dim) return false;
  try {
    return verify_dim(g, out.matching).ok;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

std::string to_json(const SolveOutcome& out) {
  nlohmann::ordered_json j;
  j["status"] = status_name(out.status);
  auto pairs = nlohmann::ordered_json::array();
  for (const Edge& e : out.matching.edges) pairs.push_back({e.u, e.v});
  j["matching"] = pairs;
  j["reason"] = out.reason.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(out.reason);
  j["stats"] = {{"edges_tried", out.stats.edges_tried},
                {"forced_edges", out.stats.forced_edges},
                {"branches", out.stats.branches},
                {"millis", out.stats.millis}};
  j["p9_checked"] = out.p9_checked;
  return j.dump();
}

}  // namespace dimkit
