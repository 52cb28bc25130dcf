#pragma once

#include <cstdint>

#include "dspforge/graph.hpp"
#include "dspforge/ids.hpp"

// Integer drawing used for the crossing checks. Grid points sit on a lattice of
// pitch 4 with an empty lattice line between blocks; split roles are offset by
// one unit so the diamonds and the split pairs stay inside their cell.
namespace dspforge::detail {

constexpr std::int64_t kPitch = 4;
constexpr std::int64_t kTreeLayer = 8;

inline std::int64_t grid_coord(int block, int idx, int n) {
  return (static_cast<std::int64_t>(block - 1) * (n + 1) + idx) * kPitch;
}

// Coordinate of the largest grid line.
inline std::int64_t grid_extent(int n, int k) { return grid_coord(k, n, n); }

inline std::int64_t slot_mean(int block, int lo, int hi, int n) {
  return (grid_coord(block, lo, n) + grid_coord(block, hi, n)) / 2;
}

inline std::int64_t fan_distance(int n) { return 4 * static_cast<std::int64_t>(n) + 8; }

inline Point grid_point(const GridId& w, int n, bool vertex_split) {
  Point p{grid_coord(w.i, w.q, n), grid_coord(w.j, w.l, n)};
  int dx = 0, dy = 0;
  switch (w.role) {
    case SplitRole::LB: dx = dy = -1; break;
    case SplitRole::TR: dx = dy = 1; break;
    case SplitRole::Hor:
      dx = vertex_split ? -1 : 1;
      dy = -1;
      break;
    case SplitRole::Ver:
      dx = vertex_split ? 1 : -1;
      dy = 1;
      break;
    default: break;
  }
  return {p.x + dx, p.y + dy};
}

// Point covering slots [lo, hi] of a terminal's fan at `distance` from the grid.
inline Point fan_point(const TerminalId& t, int lo, int hi, std::int64_t distance, int n, int k) {
  const std::int64_t lo_edge = grid_coord(1, 1, n);
  const std::int64_t hi_edge = grid_extent(n, k);
  const std::int64_t mid = slot_mean(t.index, lo, hi, n);
  switch (t.role) {
    case TerminalRole::A: return {mid, lo_edge - distance};
    case TerminalRole::B: return {mid, hi_edge + distance};
    case TerminalRole::C: return {lo_edge - distance, mid};
    case TerminalRole::D: return {hi_edge + distance, mid};
  }
  return {};
}

}  // namespace dspforge::detail
