#include "dspforge/io.hpp"

#include <algorithm>
#include <cstdio>

#include <json.hpp>

#include "dspforge/error.hpp"

namespace dspforge {

using nlohmann::json;

namespace {

std::string role_name(const VertexId& id) {
  if (auto g = as_grid(id)) return g->role == SplitRole::None ? "grid" : to_string(g->role);
  if (auto t = as_terminal(id)) return "terminal-" + to_string(t->role);
  return std::get<AuxId>(id).kind == AuxKind::Tree ? "tree" : "subdivision";
}

VertexColor parse_vertex_color(const std::string& s) {
  if (s == "black") return VertexColor::Black;
  if (s == "green") return VertexColor::Green;
  throw Error(ErrorCode::Schema, "unknown vertex color '" + s + "'");
}

EdgeColor parse_edge_color(const std::string& s) {
  if (s == "black") return EdgeColor::Black;
  if (s == "red") return EdgeColor::Red;
  if (s == "magenta") return EdgeColor::Magenta;
  throw Error(ErrorCode::Schema, "unknown edge color '" + s + "'");
}

VertexId parse_id(const std::string& s) {
  auto id = parse_vertex_id(s);
  if (!id) throw Error(ErrorCode::Schema, "malformed vertex id '" + s + "'");
  return *id;
}

int lookup(const Graph& g, const std::string& s) {
  auto v = g.find(parse_id(s));
  if (!v) throw Error(ErrorCode::Schema, "unknown vertex '" + s + "'");
  return *v;
}

json instance_json(const DspInstance& inst) {
  const Graph& g = inst.graph;
  json j;
  j["schema"] = kInstanceSchema;
  j["variant"] = to_string(inst.variant);
  j["directed"] = g.directed();
  j["N"] = inst.n;
  j["k"] = inst.k;
  j["flags"] = {{"degree_reduced", inst.flags.degree_reduced},
                {"unit_cost", inst.flags.unit_cost}};
  json src_edges = json::array();
  for (auto [u, v] : inst.source.edges()) src_edges.push_back({u, v});
  j["source"] = {{"n", inst.source.n()}, {"edges", src_edges}};

  json vertices = json::array();
  for (const Vertex& v : g.vertices()) {
    json jv = {{"id", to_string(v.id)},
               {"role", role_name(v.id)},
               {"color", to_string(v.color)},
               {"cost", v.cost}};
    if (v.pos) {
      jv["x"] = v.pos->x;
      jv["y"] = v.pos->y;
    }
    vertices.push_back(std::move(jv));
  }
  j["vertices"] = std::move(vertices);

  json edges = json::array(), colors = json::array();
  for (const Edge& e : g.edges()) {
    edges.push_back({to_string(g.id(e.from)), to_string(g.id(e.to))});
    colors.push_back(to_string(e.color));
  }
  j["edges"] = std::move(edges);
  j["edge_colors"] = std::move(colors);

  json crossings = json::array();
  for (auto [a, b] : inst.crossings) crossings.push_back({a, b});
  j["crossings"] = std::move(crossings);

  json pairs = json::array();
  for (const auto& tp : inst.pairs) pairs.push_back({to_string(g.id(tp.source)), to_string(g.id(tp.sink))});
  j["terminal_pairs"] = std::move(pairs);
  return j;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string export_dot(const DspInstance& inst) {
  const Graph& g = inst.graph;
  const char* arrow = g.directed() ? " -> " : " -- ";
  std::string out = std::string(g.directed() ? "digraph" : "graph") + " \"" +
                    to_string(inst.variant) + "\" {\n";
  out += "  node [shape=circle, width=0.15, fixedsize=true, fontsize=6];\n";
  for (int v = 0; v < static_cast<int>(g.vertex_count()); ++v) {
    const Vertex& vx = g.vertex(v);
    out += "  n" + std::to_string(v) + " [label=\"" + to_string(vx.id) + "\", color=" +
           (vx.color == VertexColor::Green ? "green" : "black");
    if (vx.pos)
      out += ", pos=\"" + std::to_string(vx.pos->x) + "," + std::to_string(vx.pos->y) + "!\"";
    out += "];\n";
  }
  for (const Edge& e : g.edges())
    out += "  n" + std::to_string(e.from) + arrow + "n" + std::to_string(e.to) +
           " [color=" + to_string(e.color) + "];\n";
  out += "}\n";
  return out;
}

std::string export_graphml(const DspInstance& inst) {
  const Graph& g = inst.graph;
  std::vector<std::vector<int>> crossed(g.edge_count());
  for (auto [a, b] : inst.crossings) {
    crossed[a].push_back(b);
    crossed[b].push_back(a);
  }
  std::string out =
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
      "  <key id=\"vid\" for=\"node\" attr.name=\"id\" attr.type=\"string\"/>\n"
      "  <key id=\"role\" for=\"node\" attr.name=\"role\" attr.type=\"string\"/>\n"
      "  <key id=\"vcolor\" for=\"node\" attr.name=\"color\" attr.type=\"string\"/>\n"
      "  <key id=\"cost\" for=\"node\" attr.name=\"cost\" attr.type=\"long\"/>\n"
      "  <key id=\"x\" for=\"node\" attr.name=\"x\" attr.type=\"long\"/>\n"
      "  <key id=\"y\" for=\"node\" attr.name=\"y\" attr.type=\"long\"/>\n"
      "  <key id=\"ecolor\" for=\"edge\" attr.name=\"color\" attr.type=\"string\"/>\n"
      "  <key id=\"crossings\" for=\"edge\" attr.name=\"crossings\" attr.type=\"int\"/>\n"
      "  <key id=\"crosses\" for=\"edge\" attr.name=\"crosses\" attr.type=\"string\"/>\n";
  out += std::string("  <graph id=\"") + to_string(inst.variant) + "\" edgedefault=\"" +
         (g.directed() ? "directed" : "undirected") + "\">\n";
  for (int v = 0; v < static_cast<int>(g.vertex_count()); ++v) {
    const Vertex& vx = g.vertex(v);
    out += "    <node id=\"n" + std::to_string(v) + "\">";
    out += "<data key=\"vid\">" + xml_escape(to_string(vx.id)) + "</data>";
    out += "<data key=\"role\">" + role_name(vx.id) + "</data>";
    out += "<data key=\"vcolor\">" + to_string(vx.color) + "</data>";
    out += "<data key=\"cost\">" + std::to_string(vx.cost) + "</data>";
    if (vx.pos) {
      out += "<data key=\"x\">" + std::to_string(vx.pos->x) + "</data>";
      out += "<data key=\"y\">" + std::to_string(vx.pos->y) + "</data>";
    }
    out += "</node>\n";
  }
  for (int e = 0; e < static_cast<int>(g.edge_count()); ++e) {
    const Edge& ed = g.edge(e);
    out += "    <edge id=\"e" + std::to_string(e) + "\" source=\"n" + std::to_string(ed.from) +
           "\" target=\"n" + std::to_string(ed.to) + "\">";
    out += "<data key=\"ecolor\">" + to_string(ed.color) + "</data>";
    out += "<data key=\"crossings\">" + std::to_string(crossed[e].size()) + "</data>";
    if (!crossed[e].empty()) {
      std::string list;
      for (int f : crossed[e]) list += (list.empty() ? "e" : " e") + std::to_string(f);
      out += "<data key=\"crosses\">" + list + "</data>";
    }
    out += "</edge>\n";
  }
  out += "  </graph>\n</graphml>\n";
  return out;
}

}  // namespace

std::string to_string(VertexColor c) { return c == VertexColor::Green ? "green" : "black"; }

std::string to_string(EdgeColor c) {
  switch (c) {
    case EdgeColor::Black: return "black";
    case EdgeColor::Red: return "red";
    case EdgeColor::Magenta: return "magenta";
  }
  return "black";
}

std::string instance_to_json(const DspInstance& inst) { return instance_json(inst).dump(); }

DspInstance instance_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Schema, std::string("invalid JSON: ") + e.what());
  }
  try {
    if (j.at("schema").get<std::string>() != kInstanceSchema)
      throw Error(ErrorCode::Schema, "unsupported schema '" + j.at("schema").get<std::string>() + "'");
    DspInstance inst;
    inst.variant = parse_variant(j.at("variant").get<std::string>());
    inst.n = j.at("N").get<int>();
    inst.k = j.at("k").get<int>();
    inst.flags.degree_reduced = j.at("flags").at("degree_reduced").get<bool>();
    inst.flags.unit_cost = j.at("flags").at("unit_cost").get<bool>();
    const bool directed = j.at("directed").get<bool>();
    if (directed != is_directed(inst.variant))
      throw Error(ErrorCode::Schema, "'directed' disagrees with the variant");

    const json& src = j.at("source");
    inst.source = CliqueGraph(src.at("n").get<int>());
    for (const json& e : src.at("edges")) inst.source.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    if (inst.source.n() != inst.n) throw Error(ErrorCode::Schema, "source size differs from N");

    GraphBuilder b(directed);
    for (const json& jv : j.at("vertices")) {
      Vertex v;
      v.id = parse_id(jv.at("id").get<std::string>());
      v.cost = jv.at("cost").get<std::int64_t>();
      if (v.cost < 1) throw Error(ErrorCode::Schema, "vertex cost must be positive");
      v.color = parse_vertex_color(jv.at("color").get<std::string>());
      if (jv.contains("x") && jv.contains("y"))
        v.pos = Point{jv.at("x").get<std::int64_t>(), jv.at("y").get<std::int64_t>()};
      b.add_vertex(std::move(v));
    }
    const json& edges = j.at("edges");
    const json& colors = j.at("edge_colors");
    if (colors.size() != edges.size())
      throw Error(ErrorCode::Schema, "edge_colors length differs from edges");
    for (std::size_t e = 0; e < edges.size(); ++e)
      b.add_edge(parse_id(edges[e].at(0).get<std::string>()),
                 parse_id(edges[e].at(1).get<std::string>()),
                 parse_edge_color(colors[e].get<std::string>()));
    inst.graph = b.build();

    for (const json& c : j.at("crossings")) {
      int a = c.at(0).get<int>(), d = c.at(1).get<int>();
      const int m = static_cast<int>(inst.graph.edge_count());
      if (a < 0 || d < 0 || a >= m || d >= m)
        throw Error(ErrorCode::Schema, "crossing references a missing edge");
      inst.crossings.emplace_back(std::min(a, d), std::max(a, d));
    }
    std::sort(inst.crossings.begin(), inst.crossings.end());
    for (const json& p : j.at("terminal_pairs"))
      inst.pairs.push_back({lookup(inst.graph, p.at(0).get<std::string>()),
                            lookup(inst.graph, p.at(1).get<std::string>())});
    return inst;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Schema, std::string("malformed instance: ") + e.what());
  }
}

std::string solution_to_json(const DspInstance& inst, const Solution& sol) {
  json paths = json::array();
  for (const PathWitness& w : sol.paths) {
    json ids = json::array();
    for (int v : w.vertices) ids.push_back(to_string(inst.graph.id(v)));
    paths.push_back({{"pair", w.pair}, {"vertices", std::move(ids)}});
  }
  json j = {{"schema", kSolutionSchema},
            {"mode", to_string(sol.mode)},
            {"count", sol.paths.size()},
            {"paths", std::move(paths)}};
  return j.dump();
}

Solution solution_from_json(const DspInstance& inst, std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Schema, std::string("invalid JSON: ") + e.what());
  }
  try {
    if (j.at("schema").get<std::string>() != kSolutionSchema)
      throw Error(ErrorCode::Schema, "unsupported schema");
    Solution sol;
    sol.mode = parse_mode(j.at("mode").get<std::string>());
    for (const json& p : j.at("paths")) {
      PathWitness w;
      w.pair = p.at("pair").get<int>();
      for (const json& v : p.at("vertices")) w.vertices.push_back(lookup(inst.graph, v.get<std::string>()));
      sol.paths.push_back(std::move(w));
    }
    if (j.at("count").get<std::size_t>() != sol.paths.size())
      throw Error(ErrorCode::Schema, "count differs from the number of paths");
    return sol;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Schema, std::string("malformed solution: ") + e.what());
  }
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string fingerprint(const DspInstance& inst) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(instance_to_json(inst))));
  return buf;
}

ExportFormat parse_export_format(std::string_view text) {
  if (text == "dot") return ExportFormat::Dot;
  if (text == "graphml") return ExportFormat::GraphML;
  if (text == "json") return ExportFormat::Json;
  throw Error(ErrorCode::Parameter, "unknown export format '" + std::string(text) + "'");
}

std::string export_instance(const DspInstance& inst, ExportFormat format) {
  switch (format) {
    case ExportFormat::Dot: return export_dot(inst);
    case ExportFormat::GraphML: return export_graphml(inst);
    case ExportFormat::Json: return instance_to_json(inst) + "\n";
  }
  return {};
}

}  // namespace dspforge
