#include "dspforge/instance.hpp"

#include "dspforge/error.hpp"

namespace dspforge {

namespace {

constexpr std::pair<Variant, const char*> kVariantNames[] = {
    {Variant::DInt, "d-int"}, {Variant::DEdge, "d-edge"}, {Variant::DVertex, "d-vertex"},
    {Variant::UInt, "u-int"}, {Variant::UEdge, "u-edge"}, {Variant::UVertex, "u-vertex"},
};

}  // namespace

std::string to_string(Variant v) {
  for (auto [var, name] : kVariantNames)
    if (var == v) return name;
  return "?";
}

std::string to_string(Mode m) { return m == Mode::Edge ? "edge" : "vertex"; }

Variant parse_variant(std::string_view text) {
  for (auto [var, name] : kVariantNames)
    if (text == name) return var;
  throw Error(ErrorCode::Parameter, "unknown variant '" + std::string(text) + "'");
}

Mode parse_mode(std::string_view text) {
  if (text == "edge") return Mode::Edge;
  if (text == "vertex") return Mode::Vertex;
  throw Error(ErrorCode::Parameter, "unknown mode '" + std::string(text) + "'");
}

bool is_directed(Variant v) {
  return v == Variant::DInt || v == Variant::DEdge || v == Variant::DVertex;
}

bool is_intermediate(Variant v) { return v == Variant::DInt || v == Variant::UInt; }
bool is_edge_split(Variant v) { return v == Variant::DEdge || v == Variant::UEdge; }
bool is_vertex_split(Variant v) { return v == Variant::DVertex || v == Variant::UVertex; }

std::optional<Mode> native_mode(Variant v) {
  if (is_edge_split(v)) return Mode::Edge;
  if (is_vertex_split(v)) return Mode::Vertex;
  return std::nullopt;
}

}  // namespace dspforge
