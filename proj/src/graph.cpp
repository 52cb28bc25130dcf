#include "dspforge/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "dspforge/error.hpp"

namespace dspforge {

std::optional<int> Graph::find(const VertexId& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int Graph::index_of(const VertexId& id) const {
  auto v = find(id);
  if (!v) throw Error(ErrorCode::OutOfRange, "unknown vertex " + to_string(id));
  return *v;
}

std::optional<int> Graph::find_edge(int u, int v) const {
  for (const Arc& a : out_[u])
    if (a.to == v) return a.edge;
  return std::nullopt;
}

void GraphBuilder::add_vertex(Vertex v) {
  auto id = v.id;
  if (!vertices_.emplace(id, std::move(v)).second)
    throw Error(ErrorCode::Schema, "duplicate vertex " + to_string(id));
}

void GraphBuilder::add_edge(const VertexId& from, const VertexId& to, EdgeColor color) {
  edges_.push_back({from, to, color});
}

Vertex& GraphBuilder::vertex(const VertexId& id) {
  auto it = vertices_.find(id);
  if (it == vertices_.end()) throw Error(ErrorCode::OutOfRange, "unknown vertex " + to_string(id));
  return it->second;
}

Graph GraphBuilder::build() const {
  Graph g;
  g.directed_ = directed_;
  g.vertices_.reserve(vertices_.size());
  for (const auto& [id, v] : vertices_) {
    g.index_.emplace(id, static_cast<int>(g.vertices_.size()));
    g.vertices_.push_back(v);
  }
  std::set<std::pair<int, int>> seen;
  for (const auto& pe : edges_) {
    auto fu = g.index_.find(pe.from), fv = g.index_.find(pe.to);
    if (fu == g.index_.end() || fv == g.index_.end())
      throw Error(ErrorCode::Schema,
                  "edge endpoint missing: " + to_string(pe.from) + " -> " + to_string(pe.to));
    int u = fu->second, v = fv->second;
    if (u == v) throw Error(ErrorCode::Schema, "self-loop at " + to_string(pe.from));
    auto key = directed_ ? std::pair{u, v} : std::pair{std::min(u, v), std::max(u, v)};
    if (!seen.insert(key).second)
      throw Error(ErrorCode::Schema,
                  "parallel edge " + to_string(pe.from) + " -> " + to_string(pe.to));
    g.edges_.push_back({u, v, pe.color});
  }
  std::sort(g.edges_.begin(), g.edges_.end(), [](const Edge& a, const Edge& b) {
    return std::pair{a.from, a.to} < std::pair{b.from, b.to};
  });
  g.out_.assign(g.vertices_.size(), {});
  g.in_.assign(g.vertices_.size(), {});
  for (int e = 0; e < static_cast<int>(g.edges_.size()); ++e) {
    const Edge& ed = g.edges_[e];
    g.out_[ed.from].push_back({ed.to, e});
    g.in_[ed.to].push_back({ed.from, e});
    if (!directed_) {
      g.out_[ed.to].push_back({ed.from, e});
      g.in_[ed.from].push_back({ed.to, e});
    }
  }
  auto by_target = [](const Arc& a, const Arc& b) { return a.to < b.to; };
  for (auto& lst : g.out_) std::sort(lst.begin(), lst.end(), by_target);
  for (auto& lst : g.in_) std::sort(lst.begin(), lst.end(), by_target);
  return g;
}

std::variant<std::vector<int>, CycleError> topological_order(const Graph& g) {
  const int n = static_cast<int>(g.vertex_count());
  std::vector<int> indeg(n, 0);
  for (const Edge& e : g.edges()) ++indeg[e.to];
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push(v);
  std::vector<int> order;
  order.reserve(n);
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    order.push_back(v);
    for (const Arc& a : g.out(v))
      if (--indeg[a.to] == 0) ready.push(a.to);
  }
  if (static_cast<int>(order.size()) == n) return order;

  // Every leftover vertex has a leftover predecessor; walk backwards until a repeat.
  std::vector<int> pos(n, -1);
  std::vector<int> walk;
  int v = 0;
  while (indeg[v] == 0) ++v;
  while (pos[v] < 0) {
    pos[v] = static_cast<int>(walk.size());
    walk.push_back(v);
    for (const Arc& a : g.in(v)) {
      if (indeg[a.to] > 0) {
        v = a.to;
        break;
      }
    }
  }
  CycleError err;
  err.cycle.assign(walk.begin() + pos[v], walk.end());
  std::reverse(err.cycle.begin(), err.cycle.end());
  return err;
}

namespace {

using i128 = __int128;

int orientation(const Point& a, const Point& b, const Point& c) {
  i128 v = static_cast<i128>(b.x - a.x) * (c.y - a.y) - static_cast<i128>(b.y - a.y) * (c.x - a.x);
  return (v > 0) - (v < 0);
}

bool on_segment(const Point& a, const Point& b, const Point& p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

// Closed-segment intersection, so touching and collinear overlap count.
bool segments_meet(const Point& p1, const Point& p2, const Point& q1, const Point& q2) {
  int o1 = orientation(p1, p2, q1), o2 = orientation(p1, p2, q2);
  int o3 = orientation(q1, q2, p1), o4 = orientation(q1, q2, p2);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(p1, p2, q1)) return true;
  if (o2 == 0 && on_segment(p1, p2, q2)) return true;
  if (o3 == 0 && on_segment(q1, q2, p1)) return true;
  if (o4 == 0 && on_segment(q1, q2, p2)) return true;
  return false;
}

}  // namespace

CrossingStats crossing_count(const Graph& g) {
  for (const Vertex& v : g.vertices())
    if (!v.pos) throw Error(ErrorCode::MissingPosition, "no position for " + to_string(v.id));
  const int m = static_cast<int>(g.edge_count());
  struct Box {
    std::int64_t x0, x1, y0, y1;
  };
  std::vector<Box> boxes(m);
  for (int e = 0; e < m; ++e) {
    const Point& a = *g.vertex(g.edge(e).from).pos;
    const Point& b = *g.vertex(g.edge(e).to).pos;
    boxes[e] = {std::min(a.x, b.x), std::max(a.x, b.x), std::min(a.y, b.y), std::max(a.y, b.y)};
  }
  // Sweep on x so the quadratic pair test only runs on overlapping boxes.
  std::vector<int> order(m);
  for (int e = 0; e < m; ++e) order[e] = e;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return boxes[a].x0 < boxes[b].x0; });

  CrossingStats stats;
  std::vector<std::size_t> per_edge(m, 0);
  for (int ai = 0; ai < m; ++ai) {
    int e = order[ai];
    const Edge& ee = g.edge(e);
    for (int bi = ai + 1; bi < m; ++bi) {
      int f = order[bi];
      if (boxes[f].x0 > boxes[e].x1) break;
      if (boxes[f].y0 > boxes[e].y1 || boxes[f].y1 < boxes[e].y0) continue;
      const Edge& ff = g.edge(f);
      if (ee.from == ff.from || ee.from == ff.to || ee.to == ff.from || ee.to == ff.to) continue;
      if (segments_meet(*g.vertex(ee.from).pos, *g.vertex(ee.to).pos, *g.vertex(ff.from).pos,
                        *g.vertex(ff.to).pos)) {
        stats.pairs.emplace_back(std::min(e, f), std::max(e, f));
        ++per_edge[e];
        ++per_edge[f];
      }
    }
  }
  std::sort(stats.pairs.begin(), stats.pairs.end());
  stats.total = stats.pairs.size();
  for (auto c : per_edge) stats.per_edge_max = std::max(stats.per_edge_max, c);
  return stats;
}

DegreeStats degree_stats(const Graph& g) {
  DegreeStats s;
  for (int v = 0; v < static_cast<int>(g.vertex_count()); ++v) {
    if (g.directed()) {
      s.max_in = std::max(s.max_in, g.in(v).size());
      s.max_out = std::max(s.max_out, g.out(v).size());
      s.max_degree = std::max(s.max_degree, g.in(v).size() + g.out(v).size());
    } else {
      s.max_degree = std::max(s.max_degree, g.out(v).size());
    }
  }
  if (!g.directed()) s.max_in = s.max_out = s.max_degree;
  return s;
}

bool is_simple(const Graph& g) {
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : g.edges()) {
    if (e.from == e.to) return false;
    auto key = g.directed() ? std::pair{e.from, e.to}
                            : std::pair{std::min(e.from, e.to), std::max(e.from, e.to)};
    if (!seen.insert(key).second) return false;
  }
  return true;
}

}  // namespace dspforge
