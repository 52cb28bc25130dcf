#include <algorithm>
#include <set>

#include "dspforge/error.hpp"
#include "dspforge/solver.hpp"

namespace dspforge {

Verdict verify_solution(const DspInstance& inst, const Solution& sol, Mode mode) {
  const Graph& g = inst.graph;
  auto reject = [](std::string why) { return Verdict{false, std::move(why)}; };
  std::set<int> pairs_seen;
  std::set<int> taken;
  for (const PathWitness& w : sol.paths) {
    const std::string tag = "pair " + std::to_string(w.pair) + ": ";
    if (w.pair < 0 || w.pair >= static_cast<int>(inst.pairs.size()))
      return reject(tag + "no such terminal pair");
    if (!pairs_seen.insert(w.pair).second) return reject(tag + "duplicate pair");
    const TerminalPair& tp = inst.pairs[w.pair];
    if (w.vertices.empty() || w.vertices.front() != tp.source || w.vertices.back() != tp.sink)
      return reject(tag + "endpoints are not the pair's terminals");
    for (int v : w.vertices)
      if (v < 0 || v >= static_cast<int>(g.vertex_count()))
        return reject(tag + "unknown vertex " + std::to_string(v));
    for (std::size_t s = 1; s < w.vertices.size(); ++s)
      if (!g.find_edge(w.vertices[s - 1], w.vertices[s]))
        return reject(tag + "no edge " + to_string(g.id(w.vertices[s - 1])) + " -> " +
                      to_string(g.id(w.vertices[s])));
    std::set<int> distinct(w.vertices.begin(), w.vertices.end());
    if (distinct.size() != w.vertices.size()) return reject(tag + "path repeats a vertex");
    const std::int64_t cost = path_cost(g, w.vertices);
    const std::int64_t best = shortest_distances(g, tp.source).dist[tp.sink];
    if (cost != best)
      return reject(tag + "not a shortest path (cost " + std::to_string(cost) + ", distance " +
                    std::to_string(best) + ")");
    std::vector<int> res;
    if (mode == Mode::Vertex) {
      res = w.vertices;
    } else {
      for (std::size_t s = 1; s < w.vertices.size(); ++s)
        res.push_back(*g.find_edge(w.vertices[s - 1], w.vertices[s]));
    }
    for (int r : res)
      if (!taken.insert(r).second)
        return reject(tag + "shares " +
                      (mode == Mode::Vertex
                           ? "vertex " + to_string(g.id(r))
                           : "edge " + to_string(g.id(g.edge(r).from)) + " -> " +
                                 to_string(g.id(g.edge(r).to))) +
                      " with an earlier path");
  }
  return {};
}

CliqueExtraction extract_clique(const DspInstance& inst, const Solution& sol) {
  if (!native_mode(inst.variant))
    throw Error(ErrorCode::Variant,
                "clique extraction needs a split variant, got " + to_string(inst.variant));
  Verdict v = verify_solution(inst, sol, sol.mode);
  if (!v.accepted) throw Error(ErrorCode::Parameter, "solution rejected: " + v.reason);

  std::vector<const PathWitness*> by_pair(inst.pairs.size(), nullptr);
  for (const PathWitness& w : sol.paths) by_pair[w.pair] = &w;

  CliqueExtraction out;
  for (int i = 1; i <= inst.k; ++i) {
    const PathWitness* vert = by_pair[vertical_pair(inst.k, i)];
    const PathWitness* horiz = by_pair[horizontal_pair(inst.k, i)];
    if (!vert || !horiz) continue;
    auto dv = is_image_of_canonical(inst, *vert);
    auto dh = is_image_of_canonical(inst, *horiz);
    if (!dv || !dh)
      throw Error(ErrorCode::Decode, "routed path of good index " + std::to_string(i) +
                                         " is not a canonical image");
    if (dv->r != dh->r)
      throw Error(ErrorCode::Decode, "good index " + std::to_string(i) + " decodes to column " +
                                         std::to_string(dv->r) + " but row " +
                                         std::to_string(dh->r));
    out.good.push_back(i);
    out.deltas.push_back(dv->r);
  }
  out.labels = out.deltas;
  std::sort(out.labels.begin(), out.labels.end());
  out.is_clique = is_clique(inst.source, out.labels);
  return out;
}

}  // namespace dspforge
