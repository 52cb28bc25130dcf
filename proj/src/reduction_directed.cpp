#include <algorithm>
#include <map>

#include "construction.hpp"
#include "dspforge/error.hpp"
#include "dspforge/reduction.hpp"
#include "layout.hpp"

namespace dspforge {

namespace {

void require_directed(const DspInstance& inst) {
  if (!inst.graph.directed())
    throw Error(ErrorCode::Variant, "expected a directed instance, got " + to_string(inst.variant));
}

bool is_source_terminal(TerminalRole r) { return r == TerminalRole::A || r == TerminalRole::C; }

}  // namespace

DspInstance build_d_int(const CliqueGraph& g, int k) {
  return detail::build_intermediate(g, k, true);
}

DspInstance split_edge_directed(const DspInstance& d_int) {
  require_directed(d_int);
  return detail::split_edges(d_int);
}

DspInstance split_vertex_directed(const DspInstance& d_int) {
  require_directed(d_int);
  return detail::split_vertices(d_int);
}

DspInstance reduce_degree_directed(const DspInstance& inst) {
  require_directed(inst);
  if (inst.variant != Variant::DEdge && inst.variant != Variant::DVertex)
    throw Error(ErrorCode::Variant, "degree reduction needs d-edge or d-vertex, got " +
                                        to_string(inst.variant));
  if (inst.flags.degree_reduced)
    throw Error(ErrorCode::DoubleApplication, "degree reduction already applied");

  const int n = inst.n, k = inst.k;
  const int h = tree_height(n);
  DspInstance out = inst;
  out.flags.degree_reduced = true;
  if (h <= 1) return out;  // a fan of at most two edges is already a tree

  const Graph& g = inst.graph;
  GraphBuilder b(true);
  for (const Vertex& v : g.vertices()) {
    Vertex copy = v;
    if (auto t = as_terminal(v.id))
      copy.pos = detail::fan_point(*t, 1, n, detail::kTreeLayer * h, n, k);
    b.add_vertex(copy);
  }

  std::map<TerminalId, std::map<int, VertexId>> leaves;
  for (const Edge& e : g.edges()) {
    const VertexId& from = g.id(e.from);
    const VertexId& to = g.id(e.to);
    if (auto t = as_terminal(from)) {
      leaves[*t][fan_slot(t->role, std::get<GridId>(to))] = to;
    } else if (auto t = as_terminal(to)) {
      leaves[*t][fan_slot(t->role, std::get<GridId>(from))] = from;
    } else {
      b.add_edge(from, to, e.color);
    }
  }

  for (const auto& [t, slots] : leaves) {
    // Node at depth g covers a block of 2^(h-g) consecutive slots; depth 0 is the terminal.
    auto node = [&, t = t](int depth, int slot) -> VertexId {
      if (depth == 0) return t;
      if (depth == h) return slots.at(slot);
      const int size = 1 << (h - depth);
      const int lo = (slot - 1) / size * size + 1;
      return AuxId{t, AuxKind::Tree, lo, std::min(lo + size - 1, n), depth};
    };
    for (int depth = 1; depth < h; ++depth) {
      const int size = 1 << (h - depth);
      for (int lo = 1; lo <= n; lo += size) {
        const int hi = std::min(lo + size - 1, n);
        b.add_vertex({AuxId{t, AuxKind::Tree, lo, hi, depth}, 1, VertexColor::Green,
                      detail::fan_point(t, lo, hi, detail::kTreeLayer * (h - depth), n, k)});
      }
    }
    for (int depth = 1; depth <= h; ++depth) {
      const int size = 1 << (h - depth);
      for (int lo = 1; lo <= n; lo += size) {
        VertexId parent = node(depth - 1, lo), child = node(depth, lo);
        if (is_source_terminal(t.role))
          b.add_edge(parent, child, EdgeColor::Magenta);
        else
          b.add_edge(child, parent, EdgeColor::Magenta);
      }
    }
  }
  detail::finalize(out, b);
  return out;
}

}  // namespace dspforge
