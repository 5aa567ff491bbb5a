#include "dimkit/component_solver.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string_view>

namespace dimkit {

namespace {

bool open_s2(const XyDecomposition& d, const Coloring& c, Vertex u) {
  return d.in_level(u, 2) && d.s2_index(u) >= 0 && c.black(u) && c.mate(u) == kNoVertex;
}

// Depth-first search for chordless cycles through S2 and level 3 that follow
// a fixed pattern of 'U' (unmatched S2 vertex) and 'T' (Unknown level-3
// vertex). The cycle is grown from a 'U' start; the last vertex closes it.
struct CyclePattern {
  const Graph& g;
  const XyDecomposition& d;
  const Coloring& c;
  const VertexSet& focus;
  std::string_view pattern;
  std::function<void(const std::vector<Vertex>&)> hit;
  std::vector<Vertex> path;

  bool fits(Vertex v, char kind) const {
    if (!focus.contains(v)) return false;
    if (kind == 'U') return open_s2(d, c, v);
    return d.in_level(v, 3) && c.unknown(v);
  }

  void extend() {
    const std::size_t k = path.size();
    if (k == pattern.size()) {
      hit(path);
      return;
    }
    const bool closing = k + 1 == pattern.size();
    for (Vertex w : g.neighbors(path.back())) {
      if (!fits(w, pattern[k])) continue;
      bool ok = true;
      for (std::size_t i = 0; i + 1 < k && ok; ++i)
        ok = path[i] != w && g.has_edge(path[i], w) == (closing && i == 0);
      if (!ok) continue;
      path.push_back(w);
      extend();
      path.pop_back();
    }
  }

  void run() {
    for (Vertex u : d.s2) {
      if (!fits(u, 'U')) continue;
      path.assign(1, u);
      extend();
    }
  }
};

Fact black_fact(const XyDecomposition& d, const Coloring& c, Rule r, Vertex t) {
  int own = d.t_owner[t];
  if (own >= 0 && open_s2(d, c, d.s2[own])) return {r, FactKind::ForcedEdge, {d.s2[own], t}};
  return {r, FactKind::ForcedBlack, {t}};
}

// Applies collected facts in order; facts drawn from an earlier state stay
// valid for every extension of it.
Step apply_all(const Graph& g, Coloring& c, const std::vector<Fact>& facts,
               std::vector<Fact>* log) {
  bool changed = false;
  for (const Fact& f : facts) {
    Step s = apply_fact(g, c, f, log);
    if (s == Step::Contradiction) return s;
    if (s == Step::Changed) changed = true;
  }
  return changed ? Step::Changed : Step::Unchanged;
}

}  // namespace

Step reduce_cycles_s2n3(const Graph& g, const XyDecomposition& d, Coloring& c,
                        const VertexSet& focus, std::vector<Fact>* log) {
  struct Rec {
    Rule rule;
    std::string_view pattern;
    std::vector<std::size_t> forced;
  };
  static const Rec recs[] = {
      {Rule::C6OneS2, "UTTTTT", {2, 4}},
      {Rule::C7TwoS2, "UTTUTTT", {5}},
      {Rule::C9TwoS2, "UTTTUTTTT", {2}},
  };
  std::vector<Fact> facts;
  std::set<Vertex> seen;
  for (const Rec& rec : recs) {
    seen.clear();
    CyclePattern search{g, d, c, focus, rec.pattern, {}, {}};
    search.hit = [&](const std::vector<Vertex>& cyc) {
      for (std::size_t i : rec.forced)
        if (seen.insert(cyc[i]).second) facts.push_back(black_fact(d, c, rec.rule, cyc[i]));
    };
    search.run();
  }
  return apply_all(g, c, facts, log);
}

Step reduce_n4(const Graph& g, const XyDecomposition& d, Coloring& c, const VertexSet& focus,
               std::vector<Fact>* log) {
  std::vector<Fact> facts;
  auto live = [&](Vertex v) { return live_in(d, c, v); };
  auto outer_live = [&](Vertex v) {  // live neighbours off level 3
    std::vector<Vertex> out;
    for (Vertex w : g.neighbors(v))
      if (live(w) && d.level[w] != 3) out.push_back(w);
    return out;
  };

  std::vector<Vertex> n4;
  focus.for_each([&](Vertex v) {
    if (d.in_level(v, 4) && c.live(v)) n4.push_back(v);
  });

  for (Vertex v : n4) {
    if (!c.unknown(v)) continue;
    auto out = outer_live(v);
    if (out.empty()) {
      facts.push_back({Rule::N4Isolated, FactKind::ForcedWhite, {v}});
    } else if (out.size() == 1 && out[0] > v) {
      auto back = outer_live(out[0]);
      if (back.size() == 1 && back[0] == v)
        facts.push_back({Rule::N4IsolatedEdge, FactKind::ForcedEdge, {v, out[0]}});
    }
  }

  // chordless C5 a-b-r-q-p with ab the only edge inside level 4
  for (Vertex a : n4) {
    if (!c.unknown(a)) continue;
    for (Vertex b : g.neighbors(a)) {
      if (b < a || !d.in_level(b, 4) || !c.unknown(b) || !focus.contains(b)) continue;
      bool forced = false;
      for (Vertex p : g.neighbors(a)) {
        if (forced) break;
        if (!d.in_level(p, 3) || g.has_edge(p, b)) continue;
        for (Vertex r : g.neighbors(b)) {
          if (forced) break;
          if (r == p || !d.in_level(r, 3) || g.has_edge(r, a) || g.has_edge(r, p)) continue;
          for (Vertex q : g.neighbors(p)) {
            if (!g.has_edge(q, r) || g.has_edge(q, a) || g.has_edge(q, b)) continue;
            if (!d.in_level(q, 3) && !d.in_level(q, 4)) continue;
            facts.push_back({Rule::C5OneN4Edge, FactKind::ForcedEdge, {a, b}});
            forced = true;
            break;
          }
        }
      }
    }
  }

  if (d.p9_rules) {
    for (Vertex z : n4) {
      int deg = 0;
      for (Vertex w : g.neighbors(z))
        if (d.in_level(w, 4) && live(w)) ++deg;
      if (deg < 3) continue;
      if (c.black(z))
        facts.push_back({Rule::N4HighDegree, FactKind::Infeasible, {z}});
      else
        facts.push_back({Rule::N4HighDegree, FactKind::ForcedWhite, {z}});
    }
    // C4 t-a-b-c with t on level 3 and a, b, c live on level 4
    focus.for_each([&](Vertex t) {
      if (!d.in_level(t, 3) || !c.unknown(t)) return;
      int own = d.t_owner[t];
      if (own < 0 || !open_s2(d, c, d.s2[own])) return;
      std::vector<Vertex> up;
      for (Vertex w : g.neighbors(t))
        if (d.in_level(w, 4) && live(w)) up.push_back(w);
      for (std::size_t i = 0; i < up.size(); ++i)
        for (std::size_t j = i + 1; j < up.size(); ++j) {
          Vertex a = up[i], cc = up[j];
          if (g.has_edge(a, cc)) continue;
          for (Vertex b : g.neighbors(a)) {
            if (b == t || !g.has_edge(b, cc) || g.has_edge(b, t)) continue;
            if (!d.in_level(b, 4) || !live(b)) continue;
            facts.push_back({Rule::C4OneN3, FactKind::ForcedEdge, {d.s2[own], t}});
            return;
          }
        }
    });
  }
  return apply_all(g, c, facts, log);
}

Step reduce_to_fixpoint(const Graph& g, const XyDecomposition& d, Coloring& c,
                        const VertexSet& focus, std::vector<Fact>* log) {
  bool any = false;
  while (true) {
    Step s = sweep_t_rules(g, d, c, focus, log);
    if (s == Step::Contradiction) return s;
    if (s == Step::Changed) {
      any = true;
      continue;
    }
    s = reduce_n4(g, d, c, focus, log);
    if (s == Step::Contradiction) return s;
    if (s == Step::Changed) {
      any = true;
      continue;
    }
    s = reduce_cycles_s2n3(g, d, c, focus, log);
    if (s == Step::Contradiction) return s;
    if (s == Step::Unchanged) break;
    any = true;
  }
  return any ? Step::Changed : Step::Unchanged;
}

std::vector<Fact> reduce_cycles_s2n3(const Graph& g, XyDecomposition& d, const VertexSet& focus) {
  std::vector<Fact> out;
  reduce_cycles_s2n3(g, d, d.coloring, focus, &out);
  d.facts.insert(d.facts.end(), out.begin(), out.end());
  return out;
}

std::vector<Fact> reduce_n4(const Graph& g, XyDecomposition& d, const VertexSet& focus) {
  std::vector<Fact> out;
  reduce_n4(g, d, d.coloring, focus, &out);
  d.facts.insert(d.facts.end(), out.begin(), out.end());
  return out;
}

N4Shape validate_n4_shape(const Graph& g, const XyDecomposition& d, const Coloring& c,
                          const VertexSet& focus) {
  N4Shape r;
  auto violated = [&](std::string why) {
    r.status = N4Shape::Status::AssumptionViolated;
    r.detail = std::move(why);
    return r;
  };
  VertexSet n4(static_cast<std::size_t>(g.n()));
  bool beyond = false;
  focus.for_each([&](Vertex v) {
    if (!c.live(v)) return;
    if (d.in_level(v, 4)) n4.insert(v);
    if (d.level[v] > 4) beyond = true;
  });
  if (beyond) return violated("live vertex beyond level 4");
  if (n4.empty()) return r;

  auto comps = connected_components(g, n4);
  std::vector<Vertex> verts = n4.to_vector();
  std::vector<int> deg(verts.size(), 0);
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (Vertex w : g.neighbors(verts[i]))
      if (n4.contains(w)) ++deg[i];
  if (comps.size() != 1) return violated("level 4 has " + std::to_string(comps.size()) + " components");

  const std::size_t k = verts.size();
  int ends = 0, max_deg = 0;
  for (int x : deg) {
    if (x == 1) ++ends;
    max_deg = std::max(max_deg, x);
  }
  if (max_deg > 2) return violated("level 4 has a vertex of degree " + std::to_string(max_deg));
  r.cycle = ends == 0 && k >= 3;
  if (r.cycle ? (k != 3 && k != 6 && k != 9) : (k < 3 || k > 8))
    return violated(std::string(r.cycle ? "cycle" : "path") + " of length " + std::to_string(k) +
                    " on level 4");

  // walk the path or cycle in order
  Vertex start = verts[0];
  for (std::size_t i = 0; i < k && !r.cycle; ++i)
    if (deg[i] == 1) {
      start = verts[i];
      break;
    }
  Vertex prev = kNoVertex, cur = start;
  while (r.component.size() < k) {
    r.component.push_back(cur);
    Vertex nxt = kNoVertex;
    for (Vertex w : g.neighbors(cur))
      if (n4.contains(w) && w != prev &&
          std::find(r.component.begin(), r.component.end(), w) == r.component.end()) {
        nxt = w;
        break;
      }
    prev = cur;
    cur = nxt;
  }

  // feasible colorings of the path or cycle on its own, consistent with c
  for (std::uint32_t mask = 0; mask < (1U << k); ++mask) {
    auto is_black = [&](std::size_t i) { return ((mask >> i) & 1U) != 0; };
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) {
      Vertex v = r.component[i];
      if ((c.black(v) && !is_black(i)) || (c.white(v) && is_black(i))) ok = false;
      int black_nbrs = 0, white_nbrs = 0;
      for (std::size_t j : {(i + k - 1) % k, (i + 1) % k}) {
        bool wraps = (i == 0 && j == k - 1) || (i == k - 1 && j == 0);
        if (!r.cycle && wraps) continue;
        (is_black(j) ? black_nbrs : white_nbrs) += 1;
      }
      if (is_black(i) ? black_nbrs != 1 : white_nbrs != 0) ok = false;
    }
    if (!ok) continue;
    std::vector<Color> col(k);
    for (std::size_t i = 0; i < k; ++i) col[i] = is_black(i) ? Color::Black : Color::White;
    r.colorings.push_back(std::move(col));
  }
  if (r.colorings.empty()) {
    r.status = N4Shape::Status::InfeasibleForXy;
    r.detail = "no feasible coloring of the level-4 part";
  }
  return r;
}

namespace {

class Search {
 public:
  Search(const Graph& g, const XyDecomposition& d, const ComponentTask& task,
         ComponentResult& out)
      : g_(g), d_(d), task_(task), out_(out) {}

  // true once a completion is stored in out_
  bool dfs(Coloring c) {
    if (++out_.branches > task_.branch_budget) {
      exceeded_ = true;
      return false;
    }
    if (reduce_to_fixpoint(g_, d_, c, task_.vertices, nullptr) == Step::Contradiction) return false;

    Vertex pick = kNoVertex;
    std::vector<Vertex> mates;
    task_.vertices.for_each([&](Vertex v) {
      if (!c.black(v) || c.mate(v) != kNoVertex) return;
      std::vector<Vertex> cand;
      for (Vertex w : g_.neighbors(v))
        if (c.unknown(w) && c.mate_allowed(v, w)) cand.push_back(w);
      if (pick == kNoVertex || cand.size() < mates.size()) {
        pick = v;
        mates = std::move(cand);
      }
    });
    if (pick != kNoVertex) {
      for (Vertex w : mates) {
        Coloring next = c;
        if (force_edge(g_, next, Edge(pick, w))) continue;
        if (dfs(std::move(next))) return true;
        if (exceeded_) return false;
      }
      return false;
    }
    task_.vertices.for_each([&](Vertex v) {
      if (pick == kNoVertex && c.unknown(v)) pick = v;
    });
    if (pick == kNoVertex) {
      if (!is_complete_feasible(g_, c, task_.vertices)) return false;
      out_.completion = std::move(c);
      return true;
    }
    for (Color col : {Color::Black, Color::White}) {
      Coloring next = c;
      if (assign_and_propagate(g_, next, pick, col)) continue;
      if (dfs(std::move(next))) return true;
      if (exceeded_) return false;
    }
    return false;
  }

  bool exceeded() const { return exceeded_; }

 private:
  const Graph& g_;
  const XyDecomposition& d_;
  const ComponentTask& task_;
  ComponentResult& out_;
  bool exceeded_ = false;
};

// Open family to seed from: the smallest one with two or more members that
// reach another family or level 4, else the smallest one.
int designated_family(const Graph& g, const XyDecomposition& d, const Coloring& c,
                      const VertexSet& focus) {
  int best = -1, best_out = -1;
  std::size_t best_size = 0, best_out_size = 0;
  for (std::size_t i = 0; i < d.s2.size(); ++i) {
    Vertex u = d.s2[i];
    if (!focus.contains(u) || !open_s2(d, c, u)) continue;
    std::size_t size = 0, outs = 0;
    d.T[i].for_each([&](Vertex t) {
      if (!c.unknown(t)) return;
      ++size;
      if (d.is_out_vertex(g, c, t)) ++outs;
    });
    if (best < 0 || size < best_size) {
      best = static_cast<int>(i);
      best_size = size;
    }
    if (outs >= 2 && (best_out < 0 || size < best_out_size)) {
      best_out = static_cast<int>(i);
      best_out_size = size;
    }
  }
  return best_out >= 0 ? best_out : best;
}

}  // namespace

ComponentResult enumerate_component_colorings(const Graph& g, const XyDecomposition& d,
                                              const Coloring& start, const ComponentTask& task) {
  ComponentResult r;
  Coloring c = start;
  if (propagate(g, c) ||
      reduce_to_fixpoint(g, d, c, task.vertices, &r.trace) == Step::Contradiction) {
    r.status = ComponentResult::Status::InfeasibleForXy;
    r.reason = r.trace.empty() ? "propagation" : std::string(rule_name(r.trace.back().rule));
    return r;
  }

  Search search(g, d, task, r);
  auto finish = [&](bool found) {
    if (found)
      r.status = ComponentResult::Status::Colored;
    else if (search.exceeded())
      r.status = ComponentResult::Status::BudgetExceeded;
    else
      r.status = ComponentResult::Status::InfeasibleForXy;
    if (r.status == ComponentResult::Status::BudgetExceeded) r.reason = "branch budget exceeded";
    if (r.status == ComponentResult::Status::InfeasibleForXy && r.reason.empty())
      r.reason = "every seed contradicts";
    return r;
  };
  auto seed_budget_hit = [&](std::size_t seeds) {
    if (seeds <= task.seed_budget) return false;
    r.status = ComponentResult::Status::BudgetExceeded;
    r.reason = "seed budget exceeded";
    return true;
  };

  bool has_n4 = false;
  task.vertices.for_each([&](Vertex v) {
    if (d.in_level(v, 4) && c.live(v)) has_n4 = true;
  });

  if (d.p9_rules && has_n4) {
    N4Shape shape = validate_n4_shape(g, d, c, task.vertices);
    if (shape.status == N4Shape::Status::InfeasibleForXy) {
      r.status = ComponentResult::Status::InfeasibleForXy;
      r.reason = shape.detail;
      return r;
    }
    if (shape.status == N4Shape::Status::Ok) {
      if (seed_budget_hit(shape.colorings.size())) return r;
      for (const auto& col : shape.colorings) {
        ++r.seeds;
        Coloring next = c;
        bool bad = false;
        for (std::size_t i = 0; i < col.size() && !bad; ++i)
          bad = assign(next, shape.component[i], col[i]).has_value();
        if (bad || propagate(g, next)) continue;
        if (search.dfs(std::move(next))) return finish(true);
        if (search.exceeded()) return finish(false);
      }
      return finish(false);
    }
    // shape outside the expected family: plain branching below
  }

  int fam = designated_family(g, d, c, task.vertices);
  if (fam >= 0) {
    Vertex u = d.s2[fam];
    std::vector<Vertex> cands;
    for (Vertex w : g.neighbors(u))
      if (c.unknown(w) && c.mate_allowed(u, w)) cands.push_back(w);
    if (seed_budget_hit(cands.size())) return r;
    for (Vertex t : cands) {
      ++r.seeds;
      Coloring next = c;
      if (force_edge(g, next, Edge(u, t))) continue;
      if (search.dfs(std::move(next))) return finish(true);
      if (search.exceeded()) return finish(false);
    }
    return finish(false);
  }
  return finish(search.dfs(std::move(c)));
}

}  // namespace dimkit
