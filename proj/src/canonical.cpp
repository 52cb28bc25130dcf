#include "dspforge/canonical.hpp"

#include <unordered_set>

#include "dspforge/error.hpp"
#include "dspforge/reduction.hpp"

namespace dspforge {

namespace {

bool is_split_point(const DspInstance& inst, const GridId& w) {
  if (is_intermediate(inst.variant)) return false;
  return in_sij(inst.source, w.i, w.j, w.q, w.l);
}

void check_range(const DspInstance& inst, int index, int r) {
  if (index < 1 || index > inst.k)
    throw Error(ErrorCode::OutOfRange, "terminal index " + std::to_string(index) + " not in [1, " +
                                           std::to_string(inst.k) + "]");
  if (r < 1 || r > inst.n)
    throw Error(ErrorCode::OutOfRange,
                "row/column " + std::to_string(r) + " not in [1, " + std::to_string(inst.n) + "]");
}

// Vertices strictly between terminal t and the grid vertex at fan slot `slot`.
std::vector<VertexId> connector(const DspInstance& inst, const TerminalId& t, int slot) {
  std::vector<VertexId> out;
  if (inst.flags.degree_reduced) {
    const int h = tree_height(inst.n);
    for (int depth = 1; depth < h; ++depth) {
      const int size = 1 << (h - depth);
      const int lo = (slot - 1) / size * size + 1;
      out.push_back(AuxId{t, AuxKind::Tree, lo, std::min(lo + size - 1, inst.n), depth});
    }
  }
  if (inst.flags.unit_cost) {
    const int m = 2 * inst.k * inst.n;
    for (int s = 1; s < m; ++s) out.push_back(AuxId{t, AuxKind::Subdivision, slot, 0, s});
  }
  return out;
}

}  // namespace

int pair_index(const DspInstance& inst, Orientation o, int index) {
  return o == Orientation::Vertical ? vertical_pair(inst.k, index)
                                    : horizontal_pair(inst.k, index);
}

std::vector<GridId> canonical_points(const DspInstance& inst, Orientation o, int index, int r) {
  check_range(inst, index, r);
  std::vector<GridId> pts;
  for (int block = 1; block <= inst.k; ++block)
    for (int s = 1; s <= inst.n; ++s) {
      if (o == Orientation::Horizontal)
        pts.push_back(GridId{block, index, s, r, SplitRole::None});
      else
        pts.push_back(GridId{index, block, r, s, SplitRole::None});
    }
  return pts;
}

std::vector<GridId> choice_points(const DspInstance& inst, Orientation o, int index, int r) {
  std::vector<GridId> out;
  for (const GridId& w : canonical_points(inst, o, index, r))
    if (is_split_point(inst, w)) out.push_back(w);
  return out;
}

PathWitness canonical_path(const DspInstance& inst, const CanonicalSpec& spec) {
  const auto pts = canonical_points(inst, spec.orientation, spec.index, spec.r);
  const bool horizontal = spec.orientation == Orientation::Horizontal;
  const Choice fallback = horizontal ? Choice::Hor : Choice::Ver;
  const auto splits = choice_points(inst, spec.orientation, spec.index, spec.r);
  if (!spec.choices.empty() && spec.choices.size() != splits.size())
    throw Error(ErrorCode::Parameter, "expected " + std::to_string(splits.size()) +
                                          " choices, got " + std::to_string(spec.choices.size()));

  const TerminalId src{horizontal ? TerminalRole::C : TerminalRole::A, spec.index};
  const TerminalId dst{horizontal ? TerminalRole::D : TerminalRole::B, spec.index};
  std::vector<VertexId> ids{src};
  for (const VertexId& v : connector(inst, src, spec.r)) ids.push_back(v);

  std::size_t next_choice = 0;
  for (const GridId& p : pts) {
    auto at = [&](SplitRole role) { return GridId{p.i, p.j, p.q, p.l, role}; };
    const bool split = is_split_point(inst, p);
    Choice c = fallback;
    if (split) {
      if (!spec.choices.empty()) c = spec.choices[next_choice];
      ++next_choice;
    }
    const SplitRole branch = c == Choice::Hor ? SplitRole::Hor : SplitRole::Ver;
    if (is_intermediate(inst.variant)) {
      ids.push_back(at(SplitRole::None));
    } else if (is_edge_split(inst.variant)) {
      ids.push_back(at(SplitRole::LB));
      ids.push_back(at(split ? branch : SplitRole::Mid));
      ids.push_back(at(SplitRole::TR));
    } else {
      ids.push_back(at(split ? branch : SplitRole::HorVer));
    }
  }
  auto tail = connector(inst, dst, spec.r);
  ids.insert(ids.end(), tail.rbegin(), tail.rend());
  ids.push_back(dst);

  PathWitness w;
  w.pair = pair_index(inst, spec.orientation, spec.index);
  w.vertices.reserve(ids.size());
  for (const VertexId& id : ids) w.vertices.push_back(inst.graph.index_of(id));
  return w;
}

PathWitness horizontal_canonical(const DspInstance& inst, int j, int r) {
  return canonical_path(inst, {Orientation::Horizontal, j, r, {}});
}

PathWitness vertical_canonical(const DspInstance& inst, int i, int r) {
  return canonical_path(inst, {Orientation::Vertical, i, r, {}});
}

bool is_valid_walk(const DspInstance& inst, const std::vector<int>& vertices) {
  std::unordered_set<int> seen;
  const int n = static_cast<int>(inst.graph.vertex_count());
  for (std::size_t s = 0; s < vertices.size(); ++s) {
    if (vertices[s] < 0 || vertices[s] >= n) return false;
    if (!seen.insert(vertices[s]).second) return false;
    if (s > 0 && !inst.graph.find_edge(vertices[s - 1], vertices[s])) return false;
  }
  return !vertices.empty();
}

std::vector<PathWitness> canonical_images(const DspInstance& inst, Orientation o, int index,
                                          int r) {
  const std::size_t t = choice_points(inst, o, index, r).size();
  if (t > 20) throw Error(ErrorCode::Parameter, "too many split points to enumerate images");
  std::vector<PathWitness> out;
  for (std::uint32_t mask = 0; mask < (1u << t); ++mask) {
    CanonicalSpec spec{o, index, r, {}};
    for (std::size_t b = 0; b < t; ++b)
      spec.choices.push_back(((mask >> b) & 1u) ? Choice::Ver : Choice::Hor);
    PathWitness w = canonical_path(inst, spec);
    if (is_valid_walk(inst, w.vertices)) out.push_back(std::move(w));
  }
  return out;
}

std::optional<CanonicalSpec> is_image_of_canonical(const DspInstance& inst, const PathWitness& w) {
  if (w.pair < 0 || w.pair >= static_cast<int>(inst.pairs.size()))
    throw Error(ErrorCode::Parameter, "pair index out of range");
  const TerminalPair& tp = inst.pairs[w.pair];
  if (!is_valid_walk(inst, w.vertices) || w.vertices.front() != tp.source ||
      w.vertices.back() != tp.sink)
    throw Error(ErrorCode::Parameter, "witness is not a path of pair " + std::to_string(w.pair));

  CanonicalSpec spec;
  spec.orientation = w.pair < inst.k ? Orientation::Vertical : Orientation::Horizontal;
  spec.index = w.pair < inst.k ? w.pair + 1 : w.pair - inst.k + 1;
  const GridId* first = nullptr;
  for (int v : w.vertices) {
    const GridId* g = as_grid(inst.graph.id(v));
    if (!g) continue;
    if (!first) first = g;
    if (is_edge_split(inst.variant) && (g->role == SplitRole::Hor || g->role == SplitRole::Ver))
      spec.choices.push_back(g->role == SplitRole::Hor ? Choice::Hor : Choice::Ver);
  }
  if (!first) return std::nullopt;
  spec.r = spec.orientation == Orientation::Horizontal ? first->l : first->q;
  if (spec.r < 1 || spec.r > inst.n) return std::nullopt;
  if (is_edge_split(inst.variant) &&
      spec.choices.size() != choice_points(inst, spec.orientation, spec.index, spec.r).size())
    return std::nullopt;
  if (canonical_path(inst, spec).vertices != w.vertices) return std::nullopt;
  return spec;
}

Solution completeness_witness(const DspInstance& inst, const std::vector<int>& labels) {
  auto mode = native_mode(inst.variant);
  if (!mode)
    throw Error(ErrorCode::Variant, "completeness witness needs a split variant, got " +
                                        to_string(inst.variant));
  if (static_cast<int>(labels.size()) != inst.k)
    throw Error(ErrorCode::Parameter, "expected " + std::to_string(inst.k) + " labels");
  if (!is_clique(inst.source, labels))
    throw Error(ErrorCode::NotClique, "labels do not form a clique in the source graph");
  Solution sol;
  sol.mode = *mode;
  for (int i = 1; i <= inst.k; ++i) sol.paths.push_back(vertical_canonical(inst, i, labels[i - 1]));
  for (int j = 1; j <= inst.k; ++j)
    sol.paths.push_back(horizontal_canonical(inst, j, labels[j - 1]));
  return sol;
}

}  // namespace dspforge
