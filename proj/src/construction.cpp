#include "construction.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "dspforge/error.hpp"
#include "dspforge/reduction.hpp"
#include "layout.hpp"

namespace dspforge {

namespace detail {

namespace {

GridId grid(int i, int j, int q, int l, SplitRole role = SplitRole::None) {
  return GridId{i, j, q, l, role};
}

bool is_horizontal_edge(const VertexId& from, const VertexId& to) {
  if (auto t = as_terminal(from)) return t->role == TerminalRole::C;
  if (auto t = as_terminal(to)) return t->role == TerminalRole::D;
  const GridId& u = std::get<GridId>(from);
  const GridId& v = std::get<GridId>(to);
  return u.j == v.j && u.l == v.l;
}

void require_intermediate(const DspInstance& in) {
  if (!is_intermediate(in.variant))
    throw Error(ErrorCode::Variant, "splitting needs an intermediate instance, got " +
                                        to_string(in.variant));
  if (in.flags.degree_reduced || in.flags.unit_cost)
    throw Error(ErrorCode::Variant, "splitting must precede the gadget reductions");
}

// Copies the terminals of `in` (with their positions) into `b`.
void copy_terminals(const DspInstance& in, GraphBuilder& b) {
  for (const Vertex& v : in.graph.vertices())
    if (as_terminal(v.id)) b.add_vertex(v);
}

}  // namespace

DspInstance build_intermediate(const CliqueGraph& g, int k, bool directed) {
  const int n = g.n();
  if (k < 1 || k > n)
    throw Error(ErrorCode::Parameter, "k must satisfy 1 <= k <= N (k=" + std::to_string(k) +
                                          ", N=" + std::to_string(n) + ")");
  GraphBuilder b(directed);
  const std::int64_t green_cost = directed ? 1 : 2LL * k * n;

  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j)
      for (int q = 1; q <= n; ++q)
        for (int l = 1; l <= n; ++l) {
          GridId w = grid(i, j, q, l);
          b.add_vertex({w, 1, VertexColor::Black, grid_point(w, n, false)});
        }

  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j)
      for (int q = 1; q <= n; ++q)
        for (int l = 1; l <= n; ++l) {
          if (q < n) b.add_edge(grid(i, j, q, l), grid(i, j, q + 1, l), EdgeColor::Black);
          if (l < n) b.add_edge(grid(i, j, q, l), grid(i, j, q, l + 1), EdgeColor::Black);
        }

  for (int j = 1; j <= k; ++j)
    for (int l = 1; l <= n; ++l) {
      for (int i = 1; i < k; ++i) {
        b.add_edge(grid(i, j, n, l), grid(i + 1, j, 1, l), EdgeColor::Red);
        b.add_edge(grid(j, i, l, n), grid(j, i + 1, l, 1), EdgeColor::Red);
      }
    }

  const auto dist = fan_distance(n);
  for (int x = 1; x <= k; ++x) {
    for (auto role : {TerminalRole::A, TerminalRole::B, TerminalRole::C, TerminalRole::D}) {
      TerminalId t{role, x};
      b.add_vertex({t, green_cost, VertexColor::Green, fan_point(t, 1, n, dist, n, k)});
    }
    for (int l = 1; l <= n; ++l) {
      b.add_edge(TerminalId{TerminalRole::A, x}, grid(x, 1, l, 1), EdgeColor::Magenta);
      b.add_edge(grid(x, k, l, n), TerminalId{TerminalRole::B, x}, EdgeColor::Magenta);
      b.add_edge(TerminalId{TerminalRole::C, x}, grid(1, x, 1, l), EdgeColor::Magenta);
      b.add_edge(grid(k, x, n, l), TerminalId{TerminalRole::D, x}, EdgeColor::Magenta);
    }
  }

  DspInstance inst;
  inst.variant = directed ? Variant::DInt : Variant::UInt;
  inst.n = n;
  inst.k = k;
  inst.source = g;
  finalize(inst, b);
  return inst;
}

DspInstance split_edges(const DspInstance& in) {
  require_intermediate(in);
  const int n = in.n;
  GraphBuilder b(in.graph.directed());
  copy_terminals(in, b);
  for (const Vertex& v : in.graph.vertices()) {
    const GridId* w = as_grid(v.id);
    if (!w) continue;
    auto role = [&](SplitRole r) { return grid(w->i, w->j, w->q, w->l, r); };
    auto add = [&](SplitRole r) {
      GridId id = role(r);
      b.add_vertex({id, v.cost, v.color, grid_point(id, n, false)});
    };
    add(SplitRole::LB);
    add(SplitRole::TR);
    if (in_sij(in.source, w->i, w->j, w->q, w->l)) {
      add(SplitRole::Hor);
      add(SplitRole::Ver);
      b.add_edge(role(SplitRole::LB), role(SplitRole::Hor), EdgeColor::Black);
      b.add_edge(role(SplitRole::Hor), role(SplitRole::TR), EdgeColor::Black);
      b.add_edge(role(SplitRole::LB), role(SplitRole::Ver), EdgeColor::Black);
      b.add_edge(role(SplitRole::Ver), role(SplitRole::TR), EdgeColor::Black);
    } else {
      add(SplitRole::Mid);
      b.add_edge(role(SplitRole::LB), role(SplitRole::Mid), EdgeColor::Black);
      b.add_edge(role(SplitRole::Mid), role(SplitRole::TR), EdgeColor::Black);
    }
  }
  // Everything arriving enters at LB, everything leaving departs from TR.
  for (const Edge& e : in.graph.edges()) {
    VertexId from = in.graph.id(e.from), to = in.graph.id(e.to);
    if (auto w = as_grid(from)) from = grid(w->i, w->j, w->q, w->l, SplitRole::TR);
    if (auto w = as_grid(to)) to = grid(w->i, w->j, w->q, w->l, SplitRole::LB);
    b.add_edge(from, to, e.color);
  }
  DspInstance out;
  out.variant = in.graph.directed() ? Variant::DEdge : Variant::UEdge;
  out.n = in.n;
  out.k = in.k;
  out.source = in.source;
  finalize(out, b);
  return out;
}

DspInstance split_vertices(const DspInstance& in) {
  require_intermediate(in);
  const int n = in.n;
  GraphBuilder b(in.graph.directed());
  copy_terminals(in, b);
  for (const Vertex& v : in.graph.vertices()) {
    const GridId* w = as_grid(v.id);
    if (!w) continue;
    auto add = [&](SplitRole r) {
      GridId id = grid(w->i, w->j, w->q, w->l, r);
      b.add_vertex({id, v.cost, v.color, grid_point(id, n, true)});
    };
    if (in_sij(in.source, w->i, w->j, w->q, w->l)) {
      add(SplitRole::Hor);
      add(SplitRole::Ver);
    } else {
      add(SplitRole::HorVer);
    }
  }
  auto endpoint = [&](const VertexId& id, SplitRole r) -> VertexId {
    const GridId* w = as_grid(id);
    if (!w) return id;
    bool split = in_sij(in.source, w->i, w->j, w->q, w->l);
    return grid(w->i, w->j, w->q, w->l, split ? r : SplitRole::HorVer);
  };
  // West and east edges use w_Hor, south and north edges use w_Ver.
  for (const Edge& e : in.graph.edges()) {
    const VertexId& from = in.graph.id(e.from);
    const VertexId& to = in.graph.id(e.to);
    SplitRole r = is_horizontal_edge(from, to) ? SplitRole::Hor : SplitRole::Ver;
    b.add_edge(endpoint(from, r), endpoint(to, r), e.color);
  }
  DspInstance out;
  out.variant = in.graph.directed() ? Variant::DVertex : Variant::UVertex;
  out.n = in.n;
  out.k = in.k;
  out.source = in.source;
  finalize(out, b);
  return out;
}

void finalize(DspInstance& inst, const GraphBuilder& b) {
  inst.graph = b.build();
  inst.pairs.clear();
  for (auto [s, t] : {std::pair{TerminalRole::A, TerminalRole::B},
                      std::pair{TerminalRole::C, TerminalRole::D}}) {
    for (int x = 1; x <= inst.k; ++x)
      inst.pairs.push_back({inst.graph.index_of(TerminalId{s, x}),
                            inst.graph.index_of(TerminalId{t, x})});
  }
  inst.crossings = structural_crossings(inst.graph, inst.variant);
}

}  // namespace detail

int tree_height(int n) {
  int h = 0;
  while ((1LL << h) < n) ++h;
  return h;
}

std::int64_t tree_internal_count(int n) {
  const int h = tree_height(n);
  std::int64_t total = 0;
  for (int e = 1; e < h; ++e) total += (n + (1LL << e) - 1) >> e;
  return total;
}

int fan_slot(TerminalRole owner, const GridId& leaf) {
  return owner == TerminalRole::A || owner == TerminalRole::B ? leaf.q : leaf.l;
}

std::int64_t count_two_splits(const CliqueGraph& g, int k) {
  const std::int64_t n = g.n();
  const std::int64_t m = static_cast<std::int64_t>(g.edges().size());
  return k * n + static_cast<std::int64_t>(k) * (k - 1) * 2 * m;
}

std::int64_t expected_vertex_count(const CliqueGraph& g, int k, Variant variant,
                                   GadgetFlags flags) {
  const std::int64_t n = g.n();
  const std::int64_t points = n * n * k * k;
  const std::int64_t two = count_two_splits(g, k);
  std::int64_t total = 4LL * k;
  if (is_intermediate(variant)) total += points;
  if (is_edge_split(variant)) total += 3 * (points - two) + 4 * two;
  if (is_vertex_split(variant)) total += points + two;
  if (flags.degree_reduced) total += 4LL * k * tree_internal_count(g.n());
  if (flags.unit_cost) total += 4LL * k * n * (2LL * k * n - 1);
  return total;
}

std::vector<std::pair<int, int>> structural_crossings(const Graph& g, Variant variant) {
  std::vector<std::pair<int, int>> out;
  if (!is_vertex_split(variant)) return out;
  using Key = std::tuple<int, int, int, int>;
  std::map<Key, int> south_in, east_out;
  for (int e = 0; e < static_cast<int>(g.edge_count()); ++e) {
    const Edge& ed = g.edge(e);
    if (auto w = as_grid(g.id(ed.to)); w && w->role == SplitRole::Ver)
      south_in[{w->i, w->j, w->q, w->l}] = e;
    if (auto w = as_grid(g.id(ed.from)); w && w->role == SplitRole::Hor)
      east_out[{w->i, w->j, w->q, w->l}] = e;
  }
  for (const auto& [key, e] : south_in) {
    auto it = east_out.find(key);
    if (it == east_out.end()) continue;
    out.emplace_back(std::min(e, it->second), std::max(e, it->second));
  }
  std::sort(out.begin(), out.end());
  return out;
}

DspInstance generate(const CliqueGraph& g, int k, Variant variant, GadgetFlags flags) {
  if (flags.degree_reduced && !is_directed(variant))
    throw Error(ErrorCode::Variant, "degree reduction applies to directed variants only");
  if (flags.unit_cost && is_directed(variant))
    throw Error(ErrorCode::Variant, "unit-cost reduction applies to undirected variants only");
  DspInstance inst;
  switch (variant) {
    case Variant::DInt: inst = build_d_int(g, k); break;
    case Variant::DEdge: inst = split_edge_directed(build_d_int(g, k)); break;
    case Variant::DVertex: inst = split_vertex_directed(build_d_int(g, k)); break;
    case Variant::UInt: inst = build_u_int(g, k); break;
    case Variant::UEdge: inst = split_edge_undirected(build_u_int(g, k)); break;
    case Variant::UVertex: inst = split_vertex_undirected(build_u_int(g, k)); break;
  }
  if (flags.degree_reduced) inst = reduce_degree_directed(inst);
  if (flags.unit_cost) inst = unit_cost_reduction(inst);
  return inst;
}

}  // namespace dspforge
