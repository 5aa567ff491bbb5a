#include "dimkit/generator.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "dimkit/oracle.hpp"
#include "dimkit/patterns.hpp"

namespace dimkit {

std::string_view p9_label_name(P9Label l) {
  switch (l) {
    case P9Label::Verified: return "verified";
    case P9Label::Violated: return "violated";
    case P9Label::Unchecked: return "unchecked";
  }
  return "unchecked";
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

}  // namespace

PlantedInstance gen_planted(int n, int k, int extra, std::uint64_t seed, bool connect,
                            bool check_p9) {
  if (n < 0 || k < 0 || 2 * k > n) throw std::invalid_argument("gen_planted: need 0 <= 2k <= n");
  const std::int64_t whites = n - 2 * k, blacks = 2 * k;
  if (extra < 0 || (extra > 0 && blacks == 0) ||
      (blacks > 0 && extra > whites * blacks - whites))
    throw std::invalid_argument("gen_planted: extra exceeds the White-Black capacity");

  Rng rng(seed);
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(perm);
  std::vector<Vertex> black(perm.begin(), perm.begin() + blacks);
  std::vector<Vertex> white(perm.begin() + blacks, perm.end());

  std::set<Edge> edges;
  PlantedInstance out;
  out.seed = seed;
  for (int i = 0; i < k; ++i) {
    Edge e(black[2 * i], black[2 * i + 1]);
    edges.insert(e);
    out.planted.edges.push_back(e);
  }
  if (blacks > 0) {
    for (Vertex w : white) edges.emplace(w, black[rng.below(black.size())]);
    for (int added = 0; added < extra;) {
      Edge e(white[rng.below(white.size())], black[rng.below(black.size())]);
      if (edges.insert(e).second) ++added;
    }
  }

  if (connect && n > 1) {
    UnionFind uf(n);
    for (const Edge& e : edges) uf.unite(e.u, e.v);
    std::vector<std::vector<Vertex>> comp_white(static_cast<std::size_t>(n)),
        comp_black(static_cast<std::size_t>(n));
    for (Vertex w : white) comp_white[uf.find(w)].push_back(w);
    for (Vertex b : black) comp_black[uf.find(b)].push_back(b);
    std::vector<int> roots;
    for (int v = 0; v < n; ++v)
      if (uf.find(v) == v) roots.push_back(v);
    // start from a component with a White vertex so later joins always work
    auto first = std::find_if(roots.begin(), roots.end(),
                              [&](int r) { return !comp_white[r].empty(); });
    if (first != roots.end() && !black.empty()) {
      std::rotate(roots.begin(), first, first + 1);
      std::vector<Vertex> main_white = comp_white[roots[0]], main_black = comp_black[roots[0]];
      for (std::size_t i = 1; i < roots.size(); ++i) {
        const auto& cw = comp_white[roots[i]];
        const auto& cb = comp_black[roots[i]];
        if (!cw.empty())
          edges.emplace(cw[rng.below(cw.size())], main_black[rng.below(main_black.size())]);
        else
          edges.emplace(main_white[rng.below(main_white.size())], cb[rng.below(cb.size())]);
        main_white.insert(main_white.end(), cw.begin(), cw.end());
        main_black.insert(main_black.end(), cb.begin(), cb.end());
      }
    }
  }

  std::vector<Edge> list(edges.begin(), edges.end());
  out.graph = Graph::from_edges(n, list);
  out.planted.normalize();
  if (!verify_dim(out.graph, out.planted))
    throw std::logic_error("gen_planted: planted matching fails verification");
  out.planted.certified = true;
  if (check_p9)
    out.p9_free = find_induced_path(out.graph, 9) ? P9Label::Violated : P9Label::Verified;
  return out;
}

RandomDraw gen_random(int n, double p, std::uint64_t seed, RandomFilters filters,
                      int max_attempts) {
  if (n < 0) throw std::invalid_argument("gen_random: negative n");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("gen_random: p outside [0, 1]");
  Rng rng(seed);
  RandomDraw r;
  while (r.attempts < max_attempts) {
    ++r.attempts;
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng.chance(p)) edges.emplace_back(u, v);
    Graph g = Graph::from_edges(n, edges);
    if (filters.k4_free && find_k4(g)) {
      r.rejection = "k4";
      continue;
    }
    if (filters.diamond_butterfly_free && !scan_forced_patterns(g).empty()) {
      r.rejection = "diamond-or-butterfly";
      continue;
    }
    if (filters.p9_free && find_induced_path(g, 9)) {
      r.rejection = "p9";
      continue;
    }
    r.graph = std::move(g);
    r.rejection.clear();
    return r;
  }
  return r;
}

namespace {

// Upper-triangle code of g under the labelling pos (old vertex -> new id);
// the pair (0,1) is the most significant bit.
std::uint64_t code_of(const Graph& g, const std::vector<int>& at) {
  const int n = g.n();
  std::uint64_t code = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) code = (code << 1) | (g.has_edge(at[i], at[j]) ? 1U : 0U);
  return code;
}

std::vector<int> refined_colours(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.n());
  std::vector<int> col(n);
  for (std::size_t v = 0; v < n; ++v) col[v] = g.degree(static_cast<Vertex>(v));
  std::size_t classes = 0;
  while (true) {
    std::vector<std::pair<std::vector<int>, std::size_t>> sig(n);
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<int> s{col[v]};
      std::vector<int> nb;
      for (Vertex w : g.neighbors(static_cast<Vertex>(v))) nb.push_back(col[w]);
      std::sort(nb.begin(), nb.end());
      s.insert(s.end(), nb.begin(), nb.end());
      sig[v] = {std::move(s), v};
    }
    std::vector<std::vector<int>> keys;
    for (auto& s : sig) keys.push_back(s.first);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    for (std::size_t v = 0; v < n; ++v)
      col[v] = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), sig[v].first) -
                                keys.begin());
    if (keys.size() == classes) return col;
    classes = keys.size();
  }
}

struct Canon {
  const Graph& g;
  std::vector<std::vector<int>> cells;
  std::vector<int> at;  // new id -> old vertex
  std::uint64_t best = 0;
  std::vector<int> best_at;
  bool have = false;

  void rec(std::size_t cell) {
    if (cell == cells.size()) {
      std::uint64_t c = code_of(g, at);
      if (!have || c < best) {
        best = c;
        best_at = at;
        have = true;
      }
      return;
    }
    std::vector<int>& members = cells[cell];
    std::sort(members.begin(), members.end());
    std::size_t base = at.size();
    do {
      at.insert(at.end(), members.begin(), members.end());
      rec(cell + 1);
      at.resize(base);
    } while (std::next_permutation(members.begin(), members.end()));
  }
};

std::pair<std::uint64_t, Graph> canonical(const Graph& g) {
  std::vector<int> col = refined_colours(g);
  Canon c{g, {}, {}, 0, {}, false};
  int classes = col.empty() ? 0 : *std::max_element(col.begin(), col.end()) + 1;
  c.cells.assign(static_cast<std::size_t>(classes), {});
  for (int v = 0; v < g.n(); ++v) c.cells[col[v]].push_back(v);
  c.rec(0);
  std::vector<int> pos(static_cast<std::size_t>(g.n()));
  for (std::size_t i = 0; i < c.best_at.size(); ++i) pos[c.best_at[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.emplace_back(pos[e.u], pos[e.v]);
  return {c.best, Graph::from_edges(g.n(), edges)};
}

}  // namespace

Graph canonical_form(const Graph& g) { return canonical(g).second; }

std::vector<Graph> small_graphs(int max_n, bool connected_only) {
  if (max_n > 10) throw std::invalid_argument("small_graphs: max_n above 10");
  std::vector<Graph> out;
  if (max_n < 1) return out;
  std::vector<Graph> layer{Graph::from_edges(1, {})};
  out.push_back(layer[0]);
  for (int n = 2; n <= max_n; ++n) {
    std::map<std::uint64_t, Graph> next;
    for (const Graph& g : layer) {
      const int old = g.n();
      std::vector<Edge> base = g.edges();
      for (std::uint32_t mask = connected_only ? 1 : 0; mask < (1U << old); ++mask) {
        std::vector<Edge> edges = base;
        for (int v = 0; v < old; ++v)
          if ((mask >> v) & 1U) edges.emplace_back(v, old);
        auto [code, canon] = canonical(Graph::from_edges(n, edges));
        next.emplace(code, std::move(canon));
      }
    }
    layer.clear();
    for (auto& [code, g] : next) layer.push_back(std::move(g));
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::vector<CorpusEntry> emit_small_corpus(int max_n) {
  std::vector<CorpusEntry> out;
  for (Graph& g : small_graphs(max_n, true)) {
    if (g.n() < 2) continue;
    CorpusEntry e;
    e.dim = oracle_dim(g).found.has_value();
    e.p9_free = !find_induced_path(g, 9);
    e.graph = std::move(g);
    out.push_back(std::move(e));
  }
  return out;
}

std::string manifest_line(const std::string& path, const Graph& g, const std::string& label,
                          P9Label p9, std::uint64_t seed) {
  nlohmann::ordered_json j;
  j["path"] = path;
  j["n"] = g.n();
  j["m"] = g.m();
  j["label"] = label;
  j["p9_free"] = p9_label_name(p9);
  j["seed"] = seed;
  return j.dump();
}

}  // namespace dimkit
