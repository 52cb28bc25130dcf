#include <algorithm>

#include "construction.hpp"
#include "dspforge/error.hpp"
#include "dspforge/reduction.hpp"

namespace dspforge {

namespace {

void require_undirected(const DspInstance& inst) {
  if (inst.graph.directed())
    throw Error(ErrorCode::Variant,
                "expected an undirected instance, got " + to_string(inst.variant));
}

Point scaled(const std::optional<Point>& p, std::int64_t m) {
  if (!p) return {};
  return {p->x * m, p->y * m};
}

}  // namespace

DspInstance build_u_int(const CliqueGraph& g, int k) {
  return detail::build_intermediate(g, k, false);
}

DspInstance split_edge_undirected(const DspInstance& u_int) {
  require_undirected(u_int);
  return detail::split_edges(u_int);
}

DspInstance split_vertex_undirected(const DspInstance& u_int) {
  require_undirected(u_int);
  return detail::split_vertices(u_int);
}

DspInstance unit_cost_reduction(const DspInstance& inst) {
  require_undirected(inst);
  if (inst.flags.unit_cost)
    throw Error(ErrorCode::DoubleApplication, "unit-cost reduction already applied");

  const Graph& g = inst.graph;
  const std::int64_t m = 2LL * inst.k * inst.n;
  // The drawing is scaled by 2m so the whole chain fits in the first half of
  // each fan segment; the last piece then carries the fan's grid-side crossing.
  const std::int64_t scale = 2 * m;
  GraphBuilder b(false);
  for (const Vertex& v : g.vertices()) {
    Vertex copy = v;
    copy.cost = 1;
    if (v.pos) copy.pos = scaled(v.pos, scale);
    b.add_vertex(copy);
  }
  for (const Edge& e : g.edges()) {
    const Vertex& from = g.vertex(e.from);
    const Vertex& to = g.vertex(e.to);
    const TerminalId* t = as_terminal(from.id);
    const Vertex* terminal = &from;
    const Vertex* leaf = &to;
    if (!t) {
      t = as_terminal(to.id);
      std::swap(terminal, leaf);
    }
    if (!t) {
      b.add_edge(from.id, to.id, e.color);
      continue;
    }
    // Step s sits s/(2m) of the way from the terminal to the leaf.
    const int slot = fan_slot(t->role, std::get<GridId>(leaf->id));
    const Point tp = scaled(terminal->pos, 1), lp = scaled(leaf->pos, 1);
    std::vector<VertexId> chain{terminal->id};
    for (std::int64_t s = 1; s < m; ++s) {
      AuxId id{*t, AuxKind::Subdivision, slot, 0, static_cast<int>(s)};
      b.add_vertex({id, 1, VertexColor::Black,
                    Point{tp.x * scale + (lp.x - tp.x) * s, tp.y * scale + (lp.y - tp.y) * s}});
      chain.push_back(id);
    }
    chain.push_back(leaf->id);
    if (terminal != &from) std::reverse(chain.begin(), chain.end());
    for (std::size_t s = 0; s + 1 < chain.size(); ++s)
      b.add_edge(chain[s], chain[s + 1], EdgeColor::Magenta);
  }
  DspInstance out = inst;
  out.flags.unit_cost = true;
  detail::finalize(out, b);
  return out;
}

}  // namespace dspforge
