// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"
#include "monalg/equivalence.hpp"
#include "monalg/fuzz.hpp"
#include "support.hpp"

using namespace monalg;
using namespace monalg::testing;

TEST_CASE("generation is deterministic per seed") {
  TermGen one(9);
  TermGen two(9);
  for (int i = 0; i < 200; ++i) REQUIRE(one.term(openConfig(3)) == two.term(openConfig(3)));
  CHECK(trialSeed(1, 2) == trialSeed(1, 2));
  CHECK(trialSeed(1, 2) != trialSeed(1, 3));
}

TEST_CASE("generated terms respect the bounds") {
  TermGen gen(10);
  GenConfig cfg = openConfig(3);
  for (int i = 0; i < 1000; ++i) {
    Monitor m = gen.term(cfg);
    REQUIRE(depth(m) <= cfg.maxDepth);
    for (const auto& a : actionsOf(m)) REQUIRE((a == "a" || a == "b"));
    for (const auto& x : varsOf(m)) REQUIRE((x == "x" || x == "y"));
  }
  for (int i = 0; i < 200; ++i) REQUIRE(isClosed(gen.term(closedConfig(3))));
}

TEST_CASE("scrambled partners are equivalent") {
  TermGen gen(11);
  for (int i = 0; i < 300; ++i) {
    Monitor m = gen.term(closedConfig(3));
    REQUIRE(bruteVerdictEquiv(m, gen.scramble(m, closedConfig(3), {}), {"a", "b"}));
  }
  ScrambleRules omega;
  omega.omega = true;
  for (int i = 0; i < 300; ++i) {
    Monitor m = gen.term(closedConfig(2));
    REQUIRE(bruteOmegaEquiv(m, gen.scramble(m, closedConfig(2), omega), {"a", "b"}));
  }
}

TEST_CASE("shrinking keeps the failure and does not grow") {
  auto fails = [](const Monitor& l, const Monitor& r) { return depth(l) >= 2 && isClosed(r); };
  std::pair<Monitor, Monitor> start{parse("a.b.(yes + a.no) + b.yes"), parse("yes + a.no")};
  auto small = shrinkPair(start, fails);
  CHECK(fails(small.first, small.second));
  CHECK(sizeOf(small.first) + sizeOf(small.second) <= sizeOf(start.first) + sizeOf(start.second));
  CHECK(sizeOf(small.first) == 3);
}

TEST_CASE("cross-check reports are reproducible") {
  CrossCheckConfig cfg;
  cfg.trials = 50;
  cfg.open = true;
  auto first = crossCheck(cfg);
  auto second = crossCheck(cfg);
  CHECK(first.trials == 50);
  CHECK(first.disagreements.empty());
  CHECK(first.equivalentPairs == second.equivalentPairs);
  CHECK(first.equivalentPairs > 0);
  CHECK(first.equivalentPairs < 50);
}
