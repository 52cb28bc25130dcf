#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <random>

#include "dspforge/canonical.hpp"
#include "dspforge/error.hpp"
#include "dspforge/io.hpp"
#include "dspforge/reduction.hpp"
#include "dspforge/solver.hpp"
#include "oracles.hpp"

using namespace dspforge;
using nlohmann::json;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

std::vector<std::pair<Variant, GadgetFlags>> all_configs() {
  return {{Variant::DInt, {}},           {Variant::DEdge, {}},         {Variant::DVertex, {}},
          {Variant::DEdge, {true, false}}, {Variant::DVertex, {true, false}}, {Variant::UInt, {}},
          {Variant::UEdge, {}},          {Variant::UVertex, {}},       {Variant::UInt, {false, true}},
          {Variant::UEdge, {false, true}}, {Variant::UVertex, {false, true}}};
}

}  // namespace

TEST_CASE("instance JSON round-trips byte for byte") {
  std::mt19937 rng(71);
  auto g = oracle::random_graph(5, 0.5, rng);
  for (auto [v, f] : all_configs()) {
    auto inst = generate(g, 2, v, f);
    auto text = instance_to_json(inst);
    auto back = instance_from_json(text);
    CHECK(instance_to_json(back) == text);
    CHECK(fingerprint(back) == fingerprint(inst));
    CHECK(back.pairs.size() == inst.pairs.size());
    CHECK(back.crossings == inst.crossings);
    CHECK(back.source.edges() == g.edges());
  }
}

TEST_CASE("generation is deterministic and fingerprints separate variants") {
  auto g = oracle::complete(3);
  std::set<std::string> prints;
  for (auto [v, f] : all_configs()) {
    auto a = fingerprint(generate(g, 2, v, f));
    CHECK(a == fingerprint(generate(g, 2, v, f)));
    CHECK(a.size() == 16);
    prints.insert(a);
  }
  CHECK(prints.size() == all_configs().size());
}

TEST_CASE("fnv1a64 reference values") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
}

TEST_CASE("instance documents are validated") {
  auto inst = generate(oracle::complete(2), 1, Variant::DEdge);
  auto j = json::parse(instance_to_json(inst));

  CHECK(code_of([] { instance_from_json("{"); }) == ErrorCode::Schema);
  auto bad = j;
  bad["schema"] = "other/1";
  CHECK(code_of([&] { instance_from_json(bad.dump()); }) == ErrorCode::Schema);
  bad = j;
  bad.erase("edges");
  CHECK(code_of([&] { instance_from_json(bad.dump()); }) == ErrorCode::Schema);
  bad = j;
  bad["directed"] = false;
  CHECK(code_of([&] { instance_from_json(bad.dump()); }) == ErrorCode::Schema);
  bad = j;
  bad["edges"][0][1] = "w9.9.9.9";
  CHECK(code_of([&] { instance_from_json(bad.dump()); }) == ErrorCode::Schema);
  bad = j;
  bad["vertices"][0]["cost"] = 0;
  CHECK(code_of([&] { instance_from_json(bad.dump()); }) == ErrorCode::Schema);
  bad = j;
  bad["edge_colors"].erase(0);
  CHECK(code_of([&] { instance_from_json(bad.dump()); }) == ErrorCode::Schema);
}

TEST_CASE("solution JSON round-trips") {
  auto inst = generate(oracle::complete(3), 2, Variant::DVertex);
  auto sol = completeness_witness(inst, {1, 3});
  auto text = solution_to_json(inst, sol);
  auto back = solution_from_json(inst, text);
  CHECK(back.mode == sol.mode);
  CHECK(back.paths == sol.paths);
  CHECK(solution_to_json(inst, back) == text);

  auto j = json::parse(text);
  j["count"] = 5;
  CHECK(code_of([&] { solution_from_json(inst, j.dump()); }) == ErrorCode::Schema);
}

TEST_CASE("exports") {
  auto inst = generate(oracle::complete(2), 2, Variant::UVertex);
  auto dot = export_instance(inst, ExportFormat::Dot);
  CHECK(dot.rfind("graph", 0) == 0);
  CHECK(dot.find("--") != std::string::npos);
  CHECK(export_instance(generate(oracle::complete(2), 2, Variant::DVertex), ExportFormat::Dot)
            .rfind("digraph", 0) == 0);

  auto xml = export_instance(inst, ExportFormat::GraphML);
  CHECK(xml.find("<graphml") != std::string::npos);
  CHECK(xml.find("edgedefault=\"undirected\"") != std::string::npos);
  CHECK(xml.find("\"crosses\"") != std::string::npos);

  CHECK(json::parse(export_instance(inst, ExportFormat::Json)) == json::parse(instance_to_json(inst)));
  CHECK(parse_export_format("graphml") == ExportFormat::GraphML);
  CHECK(code_of([] { parse_export_format("png"); }) == ErrorCode::Parameter);
}
