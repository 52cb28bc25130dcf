#include <algorithm>
#include <functional>
#include <queue>

#include "dspforge/error.hpp"
#include "dspforge/solver.hpp"

namespace dspforge {

namespace {

DistanceField dijkstra(const Graph& g, int root, bool reverse) {
  const int n = static_cast<int>(g.vertex_count());
  DistanceField f;
  f.source = root;
  f.reverse = reverse;
  f.dist.assign(n, kUnreachable);
  f.preds.assign(n, {});
  using Item = std::pair<std::int64_t, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  f.dist[root] = g.cost(root);
  pq.emplace(f.dist[root], root);
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (d != f.dist[u]) continue;
    for (const Arc& a : reverse ? g.in(u) : g.out(u)) {
      const std::int64_t nd = d + g.cost(a.to);
      if (nd < f.dist[a.to]) {
        f.dist[a.to] = nd;
        f.preds[a.to].assign(1, u);
        pq.emplace(nd, a.to);
      } else if (nd == f.dist[a.to]) {
        f.preds[a.to].push_back(u);
      }
    }
  }
  for (auto& p : f.preds) std::sort(p.begin(), p.end());
  return f;
}

}  // namespace

DistanceField shortest_distances(const Graph& g, int s) { return dijkstra(g, s, false); }

DistanceField shortest_distances_to(const Graph& g, int t) { return dijkstra(g, t, true); }

std::int64_t path_cost(const Graph& g, const std::vector<int>& vertices) {
  std::int64_t total = 0;
  for (int v : vertices) total += g.cost(v);
  return total;
}

SpDag shortest_path_dag(const DspInstance& inst, int pair) {
  if (pair < 0 || pair >= static_cast<int>(inst.pairs.size()))
    throw Error(ErrorCode::OutOfRange, "pair index " + std::to_string(pair) + " out of range");
  const Graph& g = inst.graph;
  const auto [s, t] = inst.pairs[pair];
  const auto from = shortest_distances(g, s);
  const auto to = shortest_distances_to(g, t);
  if (from.dist[t] >= kUnreachable)
    throw Error(ErrorCode::Disconnected, "pair " + std::to_string(pair) + " is disconnected");
  SpDag dag;
  dag.pair = pair;
  dag.source = s;
  dag.sink = t;
  dag.distance = from.dist[t];
  dag.succ.assign(g.vertex_count(), {});
  for (int u = 0; u < static_cast<int>(g.vertex_count()); ++u) {
    if (from.dist[u] >= kUnreachable || to.dist[u] >= kUnreachable) continue;
    if (from.dist[u] + to.dist[u] - g.cost(u) != dag.distance) continue;
    for (const Arc& a : g.out(u)) {
      if (to.dist[a.to] >= kUnreachable) continue;
      if (from.dist[u] + to.dist[a.to] == dag.distance) {
        dag.succ[u].push_back(a.to);
        dag.arcs.emplace_back(u, a.to);
      }
    }
  }
  std::sort(dag.arcs.begin(), dag.arcs.end());
  return dag;
}

std::optional<std::vector<std::vector<int>>> enumerate_shortest_paths(const SpDag& dag,
                                                                      std::size_t limit) {
  std::vector<std::vector<int>> out;
  std::vector<int> path{dag.source};
  std::vector<std::size_t> next{0};
  if (dag.source == dag.sink) {
    out.push_back(path);
    return out;
  }
  while (!path.empty()) {
    const int u = path.back();
    if (u == dag.sink) {
      out.push_back(path);
      if (out.size() > limit) return std::nullopt;
      path.pop_back();
      next.pop_back();
      continue;
    }
    std::size_t& idx = next.back();
    if (idx < dag.succ[u].size()) {
      path.push_back(dag.succ[u][idx++]);
      next.push_back(0);
    } else {
      path.pop_back();
      next.pop_back();
    }
  }
  return out;
}

}  // namespace dspforge
