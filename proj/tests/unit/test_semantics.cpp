// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <random>

#include "doctest.h"
#include "monalg/semantics.hpp"
#include "support.hpp"

using namespace monalg;
using namespace monalg::testing;

namespace {

bool contains(const std::vector<Monitor>& v, const Monitor& m) { return std::find(v.begin(), v.end(), m) != v.end(); }

// Recomputes the minimal accepted / rejected traces by enumeration.
TraceLang bruteLang(const Monitor& m, const std::vector<std::string>& actions) {
  TraceLang out;
  for (const auto& t : allTraces(actions, m.depth())) {
    auto minimal = [&](bool (*holds)(const Monitor&, const Trace&)) {
      if (!holds(m, t)) return false;
      for (std::size_t k = 0; k < t.size(); ++k)
        if (holds(m, Trace(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(k)))) return false;
      return true;
    };
    if (minimal(directAccepts)) out.acceptMin.push_back(t);
    if (minimal(directRejects)) out.rejectMin.push_back(t);
  }
  std::sort(out.acceptMin.begin(), out.acceptMin.end());
  std::sort(out.rejectMin.begin(), out.rejectMin.end());
  return out;
}

bool prefixFree(const std::vector<Trace>& ts) {
  for (std::size_t i = 0; i < ts.size(); ++i)
    for (std::size_t j = 0; j < ts.size(); ++j)
      if (i != j && isPrefix(ts[i], ts[j])) return false;
  return true;
}

Trace randomWord(std::mt19937_64& rng, const std::vector<std::string>& actions, std::size_t len) {
  Trace t;
  std::uniform_int_distribution<std::size_t> pick(0, actions.size() - 1);
  for (std::size_t i = 0; i < len; ++i) t.push_back(actions[pick(rng)]);
  return t;
}

}  // namespace

TEST_CASE("strong transitions") {
  Label a = Label::visible("a");
  CHECK(strongSteps(parse("a.yes"), a) == std::vector<Monitor>{Monitor::yes()});
  CHECK(strongSteps(parse("b.yes"), a).empty());
  CHECK(strongSteps(Monitor::no(), a) == std::vector<Monitor>{Monitor::no()});
  CHECK(strongSteps(Monitor::end(), Label::tau()) == std::vector<Monitor>{Monitor::end()});
  CHECK(strongSteps(parse("yes + a.no"), Label::tau()) == std::vector<Monitor>{Monitor::yes()});
  CHECK(strongSteps(parse("a.yes + a.no"), a) == std::vector<Monitor>{Monitor::yes(), Monitor::no()});
  CHECK(strongSteps(parseOpen("x"), a).empty());
}

TEST_CASE("weak reachability") {
  Monitor m = parse("a.b.yes + a.no");
  auto afterA = weakReach(m, {"a"});
  CHECK(contains(afterA, Monitor::no()));
  CHECK(contains(afterA, parse("b.yes")));
  CHECK(weakReach(m, {"b"}).empty());
  CHECK(contains(weakReach(m, {"a", "b"}), Monitor::yes()));
  CHECK(contains(weakReach(m, {"a", "b"}), Monitor::no()));
  CHECK(contains(weakReach(m, {}), m));
}

TEST_CASE("acceptance and rejection") {
  Monitor m = parse("a.yes + b.no");
  CHECK(accepts(m, {"a"}));
  CHECK(accepts(m, {"a", "b", "b"}));
  CHECK_FALSE(accepts(m, {}));
  CHECK_FALSE(accepts(m, {"b"}));
  CHECK(rejects(m, {"b", "a"}));
  CHECK(accepts(Monitor::yes(), {}));
  CHECK_FALSE(accepts(Monitor::end(), {"a"}));
  CHECK_THROWS_AS(accepts(parse("x"), {}), NonClosedInput);
}

TEST_CASE("minimal trace languages") {
  auto ab = Alphabet::finite({"a", "b"});
  TraceLang l = langOf(parse("a.yes + b.no + a.b.no"), ab);
  CHECK(l.acceptMin == std::vector<Trace>{{"a"}});
  CHECK(l.rejectMin == std::vector<Trace>{{"a", "b"}, {"b"}});

  TraceLang both = langOf(parse("yes + no"), ab);
  CHECK(both.acceptMin == std::vector<Trace>{{}});
  CHECK(both.rejectMin == std::vector<Trace>{{}});

  // upward closure hides longer accepted traces
  CHECK(langOf(parse("yes + a.yes"), ab).acceptMin == std::vector<Trace>{{}});
  CHECK(langOf(Monitor::end(), ab) == TraceLang{});
  CHECK_THROWS_AS(langOf(parse("c.yes", {"c"}), ab), Error);

  // the open-ended alphabet probes with the term's own actions
  TraceLang open = langOf(parseOpen("go.yes"), Alphabet::openEnded());
  CHECK(open.acceptMin == std::vector<Trace>{{"go"}});
}

TEST_CASE("omega canonical antichains") {
  auto ab = Alphabet::finite({"a", "b"});
  CHECK(omegaCanon({{"a"}, {"b"}}, ab) == std::vector<Trace>{{}});
  CHECK(omegaCanon({{"a", "a"}, {"a", "b"}, {"b"}}, ab) == std::vector<Trace>{{}});
  CHECK(omegaCanon({{"a", "a"}, {"b"}}, ab) == std::vector<Trace>{{"a", "a"}, {"b"}});
  CHECK(omegaCanon({{"a"}}, Alphabet::finite({"a"})) == std::vector<Trace>{{}});
  CHECK(omegaCanon({}, ab).empty());
}

TEST_CASE("property: languages match direct enumeration") {
  TermGen gen(31);
  for (int i = 0; i < 500; ++i) {
    Monitor m = gen.term(closedConfig(4));
    REQUIRE(langOver(m, {"a", "b"}) == bruteLang(m, {"a", "b"}));
  }
}

TEST_CASE("property: accepts and rejects agree with structural recursion") {
  TermGen gen(32);
  for (int i = 0; i < 300; ++i) {
    Monitor m = gen.term(closedConfig(3));
    for (const auto& t : allTraces({"a", "b"}, m.depth() + 1)) {
      REQUIRE(accepts(m, t) == directAccepts(m, t));
      REQUIRE(rejects(m, t) == directRejects(m, t));
    }
  }
}

TEST_CASE("property: a.(m + n) and a.m + a.n have the same behaviour") {
  TermGen gen(33);
  for (int i = 0; i < 1000; ++i) {
    Monitor m = gen.term(closedConfig(3));
    Monitor n = gen.term(closedConfig(3));
    std::string a = gen.below(2) == 0 ? "a" : "b";
    Monitor lhs = Monitor::prefix(a, Monitor::sum(m, n));
    Monitor rhs = Monitor::sum(Monitor::prefix(a, m), Monitor::prefix(a, n));
    REQUIRE(langOver(lhs, {"a", "b"}) == langOver(rhs, {"a", "b"}));
    REQUIRE(bruteVerdictEquiv(lhs, rhs, {"a", "b"}));
  }
}

TEST_CASE("property: acceptance is upward closed") {
  TermGen gen(34);
  for (int i = 0; i < 300; ++i) {
    Monitor m = gen.term(closedConfig(3));
    for (const auto& t : allTraces({"a", "b"}, 3)) {
      if (accepts(m, t)) {
        REQUIRE(accepts(m, [&] { Trace u = t; u.push_back("a"); return u; }()));
        REQUIRE(accepts(m, [&] { Trace u = t; u.push_back("b"); return u; }()));
      }
      if (rejects(m, t)) {
        Trace u = t;
        u.push_back("b");
        REQUIRE(rejects(m, u));
      }
    }
  }
}

TEST_CASE("property: minimal traces form bounded antichains") {
  TermGen gen(35);
  for (int i = 0; i < 500; ++i) {
    Monitor m = gen.term(closedConfig(4));
    TraceLang l = langOver(m, {"a", "b"});
    REQUIRE(prefixFree(l.acceptMin));
    REQUIRE(prefixFree(l.rejectMin));
    for (const auto* side : {&l.acceptMin, &l.rejectMin})
      for (const auto& t : *side) REQUIRE(t.size() <= m.depth());
  }
}

TEST_CASE("property: tau steps lead only to verdicts") {
  TermGen gen(36);
  for (int i = 0; i < 500; ++i) {
    Monitor m = gen.term(openConfig(3));
    for (const auto& target : strongSteps(m, Label::tau())) REQUIRE(target.isVerdict());
  }
}

TEST_CASE("property: omegaCanon is idempotent, order independent and keeps cones") {
  auto ab = Alphabet::finite({"a", "b"});
  TermGen gen(37);
  std::mt19937_64 rng(37);
  for (int i = 0; i < 1000; ++i) {
    Monitor m = gen.term(closedConfig(3));
    std::vector<Trace> chain = langOver(m, ab.actions()).acceptMin;
    auto canon = omegaCanon(chain, ab);
    REQUIRE(omegaCanon(canon, ab) == canon);
    std::vector<Trace> shuffled = chain;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    REQUIRE(omegaCanon(shuffled, ab) == canon);
    REQUIRE(prefixFree(canon));
    // an infinite word is in a cone iff a long enough prefix is; depth + 5
    // exceeds every antichain member
    for (int w = 0; w < 4; ++w) {
      Trace word = randomWord(rng, ab.actions(), m.depth() + 5);
      REQUIRE(coneContains(canon, word) == coneContains(chain, word));
    }
  }
}
