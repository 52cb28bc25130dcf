#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <string>

#include "dspforge/dspforge.h"

using nlohmann::json;

namespace {

const char* kK3 = "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n";

std::string take(char* s) {
  std::string out = s ? s : "";
  dsp_string_free(s);
  return out;
}

dsp_instance* make(const char* dimacs, int k, const char* variant, unsigned flags = 0) {
  dsp_clique* g = nullptr;
  REQUIRE(dsp_clique_parse_dimacs(dimacs, &g) == DSP_OK);
  dsp_instance* inst = nullptr;
  dsp_status st = dsp_instance_generate(g, k, variant, flags, &inst);
  dsp_clique_free(g);
  REQUIRE_MESSAGE(st == DSP_OK, dsp_last_error());
  return inst;
}

}  // namespace

TEST_CASE("parse errors are reported with a message") {
  dsp_clique* g = nullptr;
  CHECK(dsp_clique_parse_dimacs("p edge 2 1\ne 1 z\n", &g) == DSP_ERR_PARSE);
  CHECK(g == nullptr);
  CHECK(std::string(dsp_last_error()).find("line 2") != std::string::npos);
  CHECK(dsp_clique_parse_dimacs("p edge 2 1\ne 1 3\n", &g) == DSP_ERR_RANGE);
  CHECK(dsp_clique_parse_dimacs(nullptr, &g) == DSP_ERR_NULL_ARGUMENT);
  CHECK(std::string(dsp_status_name(DSP_ERR_BUDGET)) == "budget exceeded");
}

TEST_CASE("generation errors") {
  dsp_clique* g = nullptr;
  REQUIRE(dsp_clique_parse_dimacs(kK3, &g) == DSP_OK);
  CHECK(dsp_clique_vertex_count(g) == 3);
  dsp_instance* inst = nullptr;
  CHECK(dsp_instance_generate(g, 4, "d-edge", 0, &inst) == DSP_ERR_PARAMETER);
  CHECK(dsp_instance_generate(g, 2, "x-edge", 0, &inst) == DSP_ERR_PARAMETER);
  CHECK(dsp_instance_generate(g, 2, "d-int", DSP_FLAG_DEGREE_REDUCE, &inst) == DSP_ERR_VARIANT);
  CHECK(dsp_instance_generate(g, 2, "u-edge", DSP_FLAG_DEGREE_REDUCE, &inst) == DSP_ERR_VARIANT);
  CHECK(inst == nullptr);
  dsp_clique_free(g);
}

TEST_CASE("instance accessors and JSON round trip") {
  dsp_instance* inst = make(kK3, 2, "u-vertex", DSP_FLAG_UNIT_COST);
  CHECK(std::string(dsp_instance_variant(inst)) == "u-vertex");
  CHECK(std::string(dsp_instance_native_mode(inst)) == "vertex");
  CHECK(dsp_instance_vertex_count(inst) > 0);

  char* text = nullptr;
  REQUIRE(dsp_instance_to_json(inst, &text) == DSP_OK);
  std::string doc = take(text);
  dsp_instance* back = nullptr;
  REQUIRE(dsp_instance_from_json(doc.c_str(), &back) == DSP_OK);
  CHECK(dsp_instance_edge_count(back) == dsp_instance_edge_count(inst));

  char* fa = nullptr;
  char* fb = nullptr;
  REQUIRE(dsp_instance_fingerprint(inst, &fa) == DSP_OK);
  REQUIRE(dsp_instance_fingerprint(back, &fb) == DSP_OK);
  CHECK(take(fa) == take(fb));

  CHECK(dsp_instance_from_json("{}", &back) == DSP_ERR_SCHEMA);
  dsp_instance_free(back);
  dsp_instance_free(inst);

  dsp_instance* d_int = make(kK3, 2, "d-int");
  CHECK(dsp_instance_native_mode(d_int) == nullptr);
  dsp_instance_free(d_int);
}

TEST_CASE("export and verify") {
  dsp_instance* inst = make(kK3, 2, "d-vertex");
  char* out = nullptr;
  REQUIRE(dsp_instance_export(inst, "dot", &out) == DSP_OK);
  CHECK(take(out).rfind("digraph", 0) == 0);
  CHECK(dsp_instance_export(inst, "svg", &out) == DSP_ERR_PARAMETER);

  int all_pass = 0;
  REQUIRE(dsp_verify(inst, &out, &all_pass) == DSP_OK);
  auto report = json::parse(take(out));
  CHECK(all_pass == 1);
  CHECK(report["all_pass"] == true);
  dsp_instance_free(inst);

  dsp_instance* broken = make(kK3, 2, "u-edge");
  REQUIRE(dsp_verify(broken, &out, &all_pass) == DSP_OK);
  take(out);
  CHECK(all_pass == 0);
  dsp_instance_free(broken);
}

TEST_CASE("solve, verify and extract") {
  dsp_instance* inst = make(kK3, 3, "d-edge");
  dsp_solution* sol = nullptr;
  REQUIRE(dsp_solve(inst, "edge", 2, 0, &sol) == DSP_OK);
  CHECK(dsp_solution_count(sol) == 6);
  CHECK(dsp_solution_nodes(sol) > 0);
  CHECK(std::string(dsp_solution_mode(sol)) == "edge");

  int accepted = 0;
  char* reason = nullptr;
  REQUIRE(dsp_verify_solution(inst, sol, nullptr, &accepted, &reason) == DSP_OK);
  CHECK(accepted == 1);
  take(reason);

  char* result = nullptr;
  REQUIRE(dsp_extract_clique(inst, sol, &result) == DSP_OK);
  auto ex = json::parse(take(result));
  CHECK(ex["is_clique"] == true);
  CHECK(ex["labels"] == json::array({1, 2, 3}));

  char* text = nullptr;
  REQUIRE(dsp_solution_to_json(inst, sol, &text) == DSP_OK);
  std::string doc = take(text);
  dsp_solution* again = nullptr;
  REQUIRE(dsp_solution_from_json(inst, doc.c_str(), &again) == DSP_OK);
  CHECK(dsp_solution_count(again) == 6);
  dsp_solution_free(again);
  dsp_solution_free(sol);

  CHECK(dsp_solve(inst, "edge", 1, 3, &sol) == DSP_ERR_BUDGET);
  CHECK(dsp_solve(inst, "diagonal", 1, 0, &sol) == DSP_ERR_PARAMETER);
  dsp_instance_free(inst);
}

TEST_CASE("completeness witness through the C API") {
  dsp_instance* inst = make("p edge 4 3\ne 1 2\ne 2 3\ne 1 3\n", 3, "d-vertex");
  const int clique[] = {3, 1, 2};
  dsp_solution* sol = nullptr;
  REQUIRE(dsp_completeness_witness(inst, clique, 3, &sol) == DSP_OK);
  int accepted = 0;
  REQUIRE(dsp_verify_solution(inst, sol, "vertex", &accepted, nullptr) == DSP_OK);
  CHECK(accepted == 1);
  dsp_solution_free(sol);

  const int not_clique[] = {1, 2, 4};
  CHECK(dsp_completeness_witness(inst, not_clique, 3, &sol) == DSP_ERR_NOT_CLIQUE);
  dsp_instance_free(inst);
}

TEST_CASE("extraction failure on the undirected edge split") {
  dsp_instance* inst = make(kK3, 3, "u-edge");
  dsp_solution* sol = nullptr;
  REQUIRE(dsp_solve(inst, "edge", 1, 0, &sol) == DSP_OK);
  char* result = nullptr;
  CHECK(dsp_extract_clique(inst, sol, &result) == DSP_ERR_DECODE);
  CHECK(result == nullptr);
  dsp_solution_free(sol);
  dsp_instance_free(inst);
}

TEST_CASE("null handles") {
  CHECK(dsp_instance_to_json(nullptr, nullptr) == DSP_ERR_NULL_ARGUMENT);
  CHECK(dsp_verify(nullptr, nullptr, nullptr) == DSP_ERR_NULL_ARGUMENT);
  dsp_instance_free(nullptr);
  dsp_solution_free(nullptr);
  dsp_clique_free(nullptr);
  dsp_string_free(nullptr);
}
