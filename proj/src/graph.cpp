#include "dimkit/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <fstream>
#include <sstream>

namespace dimkit {

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  Graph g;
  g.n_ = n;
  g.rows_.assign(static_cast<std::size_t>(n), VertexSet(static_cast<std::size_t>(n)));
  g.adj_.assign(static_cast<std::size_t>(n), {});
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n)
      throw std::invalid_argument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  ") out of range");
    if (e.u == e.v) throw std::invalid_argument("self-loop at " + std::to_string(e.u));
    if (g.rows_[e.u].contains(e.v))
      throw std::invalid_argument("duplicate edge (" + std::to_string(e.u) + "," +
                                  std::to_string(e.v) + ")");
    g.rows_[e.u].insert(e.v);
    g.rows_[e.v].insert(e.u);
    ++g.m_;
  }
  for (Vertex v = 0; v < n; ++v) g.adj_[v] = g.rows_[v].to_vector();
  return g;
}

VertexSet Graph::common_neighbors(Vertex u, Vertex v) const {
  VertexSet s = rows_[u] & rows_[v];
  s.erase(u);
  s.erase(v);
  return s;
}

VertexSet Graph::closed_row(Vertex v) const {
  VertexSet s = rows_[v];
  s.insert(v);
  return s;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  std::vector<Vertex> index(static_cast<std::size_t>(n_), kNoVertex);
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<Vertex>(i);
  std::vector<Edge> es;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (Vertex w : adj_[vertices[i]])
      if (index[w] != kNoVertex && index[w] > static_cast<Vertex>(i))
        es.emplace_back(static_cast<Vertex>(i), index[w]);
  return from_edges(static_cast<int>(vertices.size()), es);
}

namespace {

bool parse_int(std::string_view tok, long long& out) {
  if (tok.empty()) return false;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc{} && p == tok.data() + tok.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) toks.push_back(line.substr(i, j - i));
    i = j;
  }
  return toks;
}

}  // namespace

Graph parse_graph(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  long long n = 0, m = 0;
  std::vector<Edge> edges;
  std::vector<VertexSet> rows;

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line[0] == '#') continue;
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks.size() != 2) throw ParseError(lineno, "expected two integers");
    long long a = 0, b = 0;
    if (!parse_int(toks[0], a) || !parse_int(toks[1], b))
      throw ParseError(lineno, "expected two integers");
    if (!have_header) {
      if (a < 0 || b < 0) throw ParseError(lineno, "malformed header");
      if (a > (1LL << 24)) throw ParseError(lineno, "vertex count too large");
      n = a;
      m = b;
      if (m > n * (n - 1) / 2) throw ParseError(lineno, "more edges than a simple graph allows");
      have_header = true;
      rows.assign(static_cast<std::size_t>(n), VertexSet(static_cast<std::size_t>(n)));
      edges.reserve(static_cast<std::size_t>(m));
      continue;
    }
    if (a < 0 || b < 0 || a >= n || b >= n) throw ParseError(lineno, "vertex id out of range");
    if (a == b) throw ParseError(lineno, "self-loop at vertex " + std::to_string(a));
    if (static_cast<long long>(edges.size()) >= m)
      throw ParseError(lineno, "more edge lines than declared");
    auto u = static_cast<Vertex>(a), v = static_cast<Vertex>(b);
    if (rows[u].contains(v)) throw ParseError(lineno, "duplicate edge");
    rows[u].insert(v);
    rows[v].insert(u);
    edges.emplace_back(u, v);
  }
  if (!have_header) throw ParseError(lineno, "missing header line \"n m\"");
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError(lineno, "expected " + std::to_string(m) + " edges, found " +
                                 std::to_string(edges.size()));
  return Graph::from_edges(static_cast<int>(n), edges);
}

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_graph(in);
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << g.n() << ' ' << g.m() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

BfsLevels bfs_levels(const Graph& g, const VertexSet& seed) {
  return bfs_levels(g, seed, g.all());
}

BfsLevels bfs_levels(const Graph& g, const VertexSet& seed, const VertexSet& within) {
  BfsLevels out;
  out.distance.assign(static_cast<std::size_t>(g.n()), -1);
  VertexSet frontier = seed & within;
  VertexSet visited = frontier;
  frontier.for_each([&](Vertex v) { out.distance[v] = 0; });
  int d = 0;
  while (!frontier.empty()) {
    out.levels.push_back(frontier);
    VertexSet next(static_cast<std::size_t>(g.n()));
    frontier.for_each([&](Vertex v) {
      for (Vertex w : g.neighbors(v))
        if (!visited.contains(w) && within.contains(w)) {
          visited.insert(w);
          next.insert(w);
          out.distance[w] = d + 1;
        }
    });
    frontier = std::move(next);
    ++d;
  }
  out.unreachable = within - visited;
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> parts;
  VertexSet left = within;
  std::vector<Vertex> stack;
  for (Vertex s = left.first(); s != kNoVertex; s = left.next(s)) {
    VertexSet part(static_cast<std::size_t>(g.n()));
    part.insert(s);
    left.erase(s);
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v))
        if (left.contains(w)) {
          left.erase(w);
          part.insert(w);
          stack.push_back(w);
        }
    }
    parts.push_back(std::move(part));
  }
  return parts;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  return connected_components(g, g.all());
}

CentralVertex central_vertex(const Graph& g, const VertexSet& within) {
  std::vector<Vertex> members = within.to_vector();
  if (members.empty()) throw std::invalid_argument("central_vertex: empty vertex set");
  std::vector<int> dist(static_cast<std::size_t>(g.n()), -1);
  std::vector<Vertex> queue;
  queue.reserve(members.size());
  CentralVertex best{kNoVertex, 0};
  for (Vertex s : members) {
    for (Vertex v : members) dist[v] = -1;
    queue.clear();
    queue.push_back(s);
    dist[s] = 0;
    int ecc = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex v = queue[head];
      ecc = dist[v];
      if (best.vertex != kNoVertex && ecc >= best.eccentricity) break;
      for (Vertex w : g.neighbors(v))
        if (dist[w] < 0 && within.contains(w)) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
    }
    if (best.vertex != kNoVertex && ecc >= best.eccentricity) continue;
    if (queue.size() != members.size())
      throw std::invalid_argument("central_vertex: graph is disconnected");
    best = {s, ecc};
  }
  return best;
}

CentralVertex central_vertex(const Graph& g) { return central_vertex(g, g.all()); }

Graph path_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return Graph::from_edges(n, es);
}

Graph cycle_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, es);
}

Graph complete_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
  return Graph::from_edges(n, es);
}

Graph star_graph(int leaves) {
  std::vector<Edge> es;
  for (int i = 1; i <= leaves; ++i) es.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, es);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> es = a.edges();
  for (const Edge& e : b.edges()) es.emplace_back(e.u + a.n(), e.v + a.n());
  return Graph::from_edges(a.n() + b.n(), es);
}

}  // namespace dimkit
