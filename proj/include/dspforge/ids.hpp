#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <variant>

namespace dspforge {

/// Role a grid-derived vertex plays after a splitting operation.
/// `None` only appears in the intermediate graphs; `HorVer` marks a
/// not-split vertex in the vertex variants (w_Hor and w_Ver are the same vertex).
enum class SplitRole : std::uint8_t { None, LB, Mid, TR, Hor, Ver, HorVer };

enum class TerminalRole : std::uint8_t { A, B, C, D };

enum class AuxKind : std::uint8_t { Tree, Subdivision };

/// w_{i,j}^{q,l}: block column i, block row j, column q, row l (all 1-based).
struct GridId {
  int i = 0, j = 0, q = 0, l = 0;
  SplitRole role = SplitRole::None;

  auto key() const { return std::tie(i, j, q, l, role); }
  friend bool operator==(const GridId& a, const GridId& b) { return a.key() == b.key(); }
  friend bool operator<(const GridId& a, const GridId& b) { return a.key() < b.key(); }
};

struct TerminalId {
  TerminalRole role = TerminalRole::A;
  int index = 0;

  auto key() const { return std::tie(role, index); }
  friend bool operator==(const TerminalId& a, const TerminalId& b) { return a.key() == b.key(); }
  friend bool operator<(const TerminalId& a, const TerminalId& b) { return a.key() < b.key(); }
};

/// Gadget vertex owned by one terminal.
/// Tree nodes cover the leaf range [lo, hi] at distance `step` from the terminal.
/// Subdivision vertices sit on the fan edge to leaf `lo` at distance `step`.
struct AuxId {
  TerminalId owner;
  AuxKind kind = AuxKind::Tree;
  int lo = 0, hi = 0, step = 0;

  auto key() const { return std::tie(owner, kind, lo, hi, step); }
  friend bool operator==(const AuxId& a, const AuxId& b) { return a.key() == b.key(); }
  friend bool operator<(const AuxId& a, const AuxId& b) { return a.key() < b.key(); }
};

using VertexId = std::variant<GridId, TerminalId, AuxId>;

std::string to_string(const VertexId& id);
std::string to_string(SplitRole role);
std::string to_string(TerminalRole role);

/// Inverse of to_string; std::nullopt on malformed input.
std::optional<VertexId> parse_vertex_id(std::string_view text);

inline const GridId* as_grid(const VertexId& id) { return std::get_if<GridId>(&id); }
inline const TerminalId* as_terminal(const VertexId& id) { return std::get_if<TerminalId>(&id); }
inline const AuxId* as_aux(const VertexId& id) { return std::get_if<AuxId>(&id); }

}  // namespace dspforge
