#include "dspforge/ids.hpp"

#include <charconv>

namespace dspforge {

namespace {

constexpr char kTerminalLetters[] = {'a', 'b', 'c', 'd'};

// Reads a positive decimal integer from the front of `s`, advancing it.
bool take_int(std::string_view& s, int& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc() || ptr == s.data()) return false;
  s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
  return true;
}

bool take_char(std::string_view& s, char c) {
  if (s.empty() || s.front() != c) return false;
  s.remove_prefix(1);
  return true;
}

std::optional<TerminalId> take_terminal(std::string_view& s) {
  if (s.empty()) return std::nullopt;
  TerminalId t;
  switch (s.front()) {
    case 'a': t.role = TerminalRole::A; break;
    case 'b': t.role = TerminalRole::B; break;
    case 'c': t.role = TerminalRole::C; break;
    case 'd': t.role = TerminalRole::D; break;
    default: return std::nullopt;
  }
  s.remove_prefix(1);
  if (!take_int(s, t.index)) return std::nullopt;
  return t;
}

std::string terminal_string(const TerminalId& t) {
  return kTerminalLetters[static_cast<int>(t.role)] + std::to_string(t.index);
}

}  // namespace

std::string to_string(SplitRole role) {
  switch (role) {
    case SplitRole::None: return "";
    case SplitRole::LB: return "LB";
    case SplitRole::Mid: return "Mid";
    case SplitRole::TR: return "TR";
    case SplitRole::Hor: return "Hor";
    case SplitRole::Ver: return "Ver";
    case SplitRole::HorVer: return "HV";
  }
  return "";
}

std::string to_string(TerminalRole role) {
  return std::string(1, kTerminalLetters[static_cast<int>(role)]);
}

std::string to_string(const VertexId& id) {
  if (auto g = as_grid(id)) {
    std::string s = "w" + std::to_string(g->i) + "." + std::to_string(g->j) + "." +
                    std::to_string(g->q) + "." + std::to_string(g->l);
    if (g->role != SplitRole::None) s += "/" + to_string(g->role);
    return s;
  }
  if (auto t = as_terminal(id)) return terminal_string(*t);
  const auto& a = std::get<AuxId>(id);
  std::string s = terminal_string(a.owner) + "~";
  if (a.kind == AuxKind::Tree) {
    s += "t" + std::to_string(a.lo) + "-" + std::to_string(a.hi);
  } else {
    s += "s" + std::to_string(a.lo);
  }
  return s + "@" + std::to_string(a.step);
}

std::optional<VertexId> parse_vertex_id(std::string_view s) {
  if (s.empty()) return std::nullopt;
  if (s.front() == 'w') {
    s.remove_prefix(1);
    GridId g;
    if (!take_int(s, g.i) || !take_char(s, '.') || !take_int(s, g.j) || !take_char(s, '.') ||
        !take_int(s, g.q) || !take_char(s, '.') || !take_int(s, g.l))
      return std::nullopt;
    if (s.empty()) return g;
    if (!take_char(s, '/')) return std::nullopt;
    for (auto role : {SplitRole::LB, SplitRole::Mid, SplitRole::TR, SplitRole::Hor,
                      SplitRole::Ver, SplitRole::HorVer}) {
      if (s == to_string(role)) {
        g.role = role;
        return g;
      }
    }
    return std::nullopt;
  }
  auto owner = take_terminal(s);
  if (!owner) return std::nullopt;
  if (s.empty()) return *owner;
  if (!take_char(s, '~') || s.empty()) return std::nullopt;
  AuxId a;
  a.owner = *owner;
  if (take_char(s, 't')) {
    a.kind = AuxKind::Tree;
    if (!take_int(s, a.lo) || !take_char(s, '-') || !take_int(s, a.hi)) return std::nullopt;
  } else if (take_char(s, 's')) {
    a.kind = AuxKind::Subdivision;
    if (!take_int(s, a.lo)) return std::nullopt;
  } else {
    return std::nullopt;
  }
  if (!take_char(s, '@') || !take_int(s, a.step) || !s.empty()) return std::nullopt;
  return a;
}

}  // namespace dspforge
