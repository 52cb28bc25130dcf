#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dspforge/clique.hpp"
#include "dspforge/error.hpp"
#include "oracles.hpp"

using namespace dspforge;

TEST_CASE("parse_dimacs reads the listed edges") {
  auto k3 = parse_dimacs("p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
  CHECK(k3.n() == 3);
  CHECK(k3.edges() == std::set<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}});

  auto empty = parse_dimacs("c nothing here\np edge 2 0\n");
  CHECK(empty.n() == 2);
  CHECK(empty.edges().empty());

  auto dup = parse_dimacs("p edge 2 2\ne 1 2\ne 2 1\ne 1 2\n");
  CHECK(dup.edges().size() == 1);
}

TEST_CASE("parse_dimacs errors carry the line number") {
  try {
    parse_dimacs("p edge 3 1\n\ne 1 x\n");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Parse);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  try {
    parse_dimacs("p edge 3 1\ne 1 4\n");
    FAIL("expected a range error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OutOfRange);
  }
  CHECK_THROWS_AS(parse_dimacs("e 1 2\n"), Error);
  CHECK_THROWS_AS(parse_dimacs(""), Error);
  CHECK_THROWS_AS(parse_dimacs("p edge 2 1\ne 1 1\n"), Error);
}

TEST_CASE("S_ij relation") {
  auto k3 = oracle::complete(3);
  CHECK(compute_sij(k3, 1, 1) == SijRelation{{1, 1}, {2, 2}, {3, 3}});
  CHECK(compute_sij(k3, 1, 2) == SijRelation{{1, 2}, {2, 1}, {1, 3}, {3, 1}, {2, 3}, {3, 2}});
  CHECK(compute_sij(CliqueGraph(2), 1, 2).empty());
}

TEST_CASE("S_ij is symmetric off the diagonal and exactly the diagonal on it") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = oracle::random_graph(6, 0.5, rng);
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j) {
        auto s = compute_sij(g, i, j);
        for (auto [a, b] : s) {
          if (i == j) CHECK(a == b);
          else CHECK(s.count({b, a}) == 1);
        }
        if (i == j) CHECK(s.size() == static_cast<std::size_t>(g.n()));
        else CHECK(s.size() == 2 * g.edges().size());
      }
  }
}

TEST_CASE("is_clique") {
  auto k3 = oracle::complete(3);
  CHECK(is_clique(k3, {1, 2, 3}));
  CHECK_FALSE(is_clique(CliqueGraph(2), {1, 2}));
  CHECK(is_clique(CliqueGraph(4), {3}));
  CHECK_FALSE(is_clique(k3, {1, 1}));
}

TEST_CASE("brute-force maximum clique") {
  auto r = max_clique_bruteforce(oracle::complete(3));
  CHECK(r.size == 3);
  CHECK(r.witness == std::vector<int>{1, 2, 3});

  r = max_clique_bruteforce(CliqueGraph(4));
  CHECK(r.size == 1);
  CHECK(r.witness == std::vector<int>{1});

  auto c5 = oracle::from_edges(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}});
  r = max_clique_bruteforce(c5);
  CHECK(r.size == 2);
  CHECK(r.witness == std::vector<int>{1, 2});

  CHECK_THROWS_AS(max_clique_bruteforce(CliqueGraph(21)), Error);
}

TEST_CASE("brute-force witness is a clique and nothing larger exists") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = oracle::random_graph(8, 0.45, rng);
    auto r = max_clique_bruteforce(g);
    CHECK(is_clique(g, r.witness));
    CHECK(static_cast<int>(r.witness.size()) == r.size);
    // Exhaustive subsets as the reference.
    int best = 0;
    for (int mask = 1; mask < (1 << g.n()); ++mask) {
      std::vector<int> z;
      for (int v = 0; v < g.n(); ++v)
        if (mask >> v & 1) z.push_back(v + 1);
      if (is_clique(g, z)) best = std::max(best, static_cast<int>(z.size()));
    }
    CHECK(r.size == best);
  }
}
