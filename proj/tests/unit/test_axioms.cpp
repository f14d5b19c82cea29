// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"
#include "monalg/axioms.hpp"
#include "monalg/equivalence.hpp"
#include "monalg/fuzz.hpp"
#include "support.hpp"

using namespace monalg;
using namespace monalg::testing;

namespace {

const Alphabet kA = Alphabet::finite({"a"});
const Alphabet kAB = Alphabet::finite({"a", "b"});

Trace repeat(const Trace& s, unsigned k) {
  Trace out;
  for (unsigned i = 0; i < k; ++i) out.insert(out.end(), s.begin(), s.end());
  return out;
}

Bindings withAction(const std::string& a) { return Bindings{a, std::nullopt, std::nullopt}; }
Bindings withTrace(Trace s, unsigned k) { return Bindings{std::nullopt, std::move(s), k}; }

}  // namespace

TEST_CASE("prefix sets") {
  CHECK(preSet({"a", "b"}) == std::vector<Trace>{{}, {"a"}, {"a", "b"}});
  CHECK(preSet({}) == std::vector<Trace>{{}});
  CHECK(preSet({"a", "a", "a"}).size() == 4);
}

TEST_CASE("barLeq, bar and barK expansions") {
  Monitor both = parse("yes + no");
  CHECK(barLeqTraces({"a", "b"}, kAB) == std::vector<Trace>{{"b"}, {"a", "a"}, {"b", "a"}, {"b", "b"}});
  CHECK(acEqual(barLeq({"a", "b"}, both, kAB),
                parse("b.(yes+no) + a.a.(yes+no) + b.b.(yes+no) + b.a.(yes+no)")));
  CHECK(barLeq({}, both, kAB) == Monitor::end());
  CHECK(barLeq({"a"}, Monitor::yes(), kAB) == parse("b.yes"));

  CHECK(acEqual(bar({"a", "b"}, both, kAB),
                parse("b.(yes+no) + a.a.(yes+no) + b.b.(yes+no) + b.a.(yes+no)"
                      " + a.b.(a.(yes+no) + b.(yes+no))")));
  CHECK(acEqual(bar({}, parse("yes", {"a"}), kA), parse("a.yes", {"a"})));
  CHECK(acEqual(bar({"a"}, Monitor::yes(), kAB), parse("b.yes + a.(a.yes + b.yes)")));

  Monitor leq = barLeq({"a", "b"}, both, kAB);
  Monitor full = bar({"a", "b"}, both, kAB);
  CHECK(acEqual(barK({"a", "b"}, 3, both, kAB),
                Monitor::sum(prefixSeq({"a", "b"}, leq), prefixSeq({"a", "b", "a", "b"}, full))));
  CHECK(barK({"a"}, 1, both, kAB) == bar({"a"}, both, kAB));
  CHECK(depth(barK({"a"}, 3, both, kAB)) == 4);

  CHECK_THROWS_AS(barK({}, 2, both, kAB), AxiomError);
  CHECK_THROWS_AS(barK({"a"}, 0, both, kAB), AxiomError);
}

TEST_CASE("property: barK(s, k, yes+no) covers exactly the traces after s outside pre(s^k)") {
  Monitor both = parse("yes + no");
  for (const auto& s : allTraces({"a", "b"}, 2)) {
    if (s.empty()) continue;
    for (unsigned k = 1; k <= 3; ++k) {
      Monitor cover = barK(s, k, both, kAB);
      const Trace sk = repeat(s, k);
      auto prefixes = preSet(sk);
      for (const auto& t : allTraces({"a", "b"}, depth(cover) + 1)) {
        bool inPre = std::find(prefixes.begin(), prefixes.end(), t) != prefixes.end();
        bool expected = k == 1 ? !inPre : (isPrefix(s, t) && !inPre);
        REQUIRE(directAccepts(cover, t) == expected);
        REQUIRE(directRejects(cover, t) == expected);
      }
    }
  }
}

TEST_CASE("instances") {
  auto ya = instantiate(Schema::Y_a, withAction("a"), kAB);
  CHECK(ya.equation.lhs == Monitor::yes());
  CHECK(ya.equation.rhs == parse("yes + a.yes"));
  CHECK(instantiate(Schema::D_a, withAction("b"), kAB).equation ==
        Equation{parse("b.(x + y)"), parse("b.x + b.y")});
  CHECK(instantiate(Schema::O1, {}, kAB).equation == Equation{parse("yes + no"), parse("yes + no + x")});
  CHECK(instantiate(Schema::V1, withAction("a"), kA).equation ==
        Equation{parse("x", {"a"}), parse("x + a.x", {"a"})});
  CHECK(instantiate(Schema::V1, {}, kA).equation == instantiate(Schema::V1, withAction("a"), kA).equation);
  CHECK(acEqual(instantiate(Schema::Y_omega, {}, kAB).equation.rhs, parse("a.yes + b.yes")));

  auto o2 = instantiate(Schema::O2, withTrace({"a"}, 1), kAB);
  Monitor cover = bar({"a"}, parse("yes + no"), kAB);
  CHECK(o2.equation.lhs == Monitor::sum(parse("x + a.x"), cover));
  CHECK(o2.equation.rhs == Monitor::sum(parse("x"), cover));

  auto kindOf = [](auto&& f) {
    try {
      f();
    } catch (const AxiomError& e) {
      return e.kind();
    }
    return AxiomErrorKind::BadParameter;
  };
  CHECK((kindOf([] { instantiate(Schema::E_a, {}, kAB); }) == AxiomErrorKind::ArityMismatch));
  CHECK((kindOf([] { instantiate(Schema::Y_omega, {}, Alphabet::openEnded()); }) ==
         AxiomErrorKind::InfiniteAlphabetForFiniteSchema));
  CHECK_THROWS_AS(instantiate(Schema::O2, withTrace({}, 1), kAB), AxiomError);
  CHECK_THROWS_AS(instantiate(Schema::O2, withTrace({"c"}, 1), kAB), AxiomError);
}

TEST_CASE("systems") {
  CHECK(listSystem(SystemName::Ev, kA).size() == 8);
  CHECK(listSystem(SystemName::EvPrime, kA).size() == 9);
  CHECK(listSystem(SystemName::Ev1Prime, kA).size() == 10);
  CHECK(listSystem(SystemName::Eomega1Prime, kA).size() == 6);
  CHECK(listSystem(SystemName::Ev, kAB).size() == 12);
  CHECK(listSystem(SystemName::EvfPrime, kAB, SchemaBounds{1, 1}).size() == 12 + 1 + 2);
  CHECK(listSystem(SystemName::EvfPrime, kAB, SchemaBounds{2, 3}).size() == 13 + 6 * 3);

  try {
    listSystem(SystemName::EvfPrime, kAB);
    FAIL("missing bounds accepted");
  } catch (const AxiomError& e) {
    CHECK((e.kind() == AxiomErrorKind::MissingBounds));
  }

  CHECK(systemContains(SystemName::Eomega, Schema::Y_omega, kAB));
  CHECK_FALSE(systemContains(SystemName::EvPrime, Schema::V1, kAB));
  CHECK_FALSE(systemContains(SystemName::Ev, Schema::O1, kAB));
  for (SystemName s : allSystems()) CHECK(parseSystemName(systemName(s)) == s);
  for (Schema s : allSchemas()) CHECK(parseSchemaName(schemaName(s)) == s);
}

TEST_CASE("witness family") {
  Equation w = witnessFamily(1, kAB);
  CHECK(w == instantiate(Schema::O2, withTrace({"a"}, 3), kAB).equation);
  CHECK_THROWS_AS(witnessFamily(0, kAB), AxiomError);
  CHECK_THROWS_AS(witnessFamily(1, kA), AxiomError);
}

TEST_CASE("soundness fuzzing flags unsound schemas") {
  auto ya = instantiate(Schema::Y_a, withAction("a"), kAB);
  CHECK(soundnessFuzz(ya, kAB, EquivMode::Verdict, 100, 1).failures.empty());

  auto yomega = instantiate(Schema::Y_omega, {}, kAB);
  CHECK(soundnessFuzz(yomega, kAB, EquivMode::OmegaVerdict, 100, 1).failures.empty());
  auto verdict = soundnessFuzz(yomega, kAB, EquivMode::Verdict, 100, 1);
  REQUIRE(verdict.failures.size() == 100);
  CHECK(verdict.failures[0].counterexample.trace.empty());

  auto v1 = instantiate(Schema::V1, withAction("a"), kAB);
  auto v1Report = soundnessFuzz(v1, kAB, EquivMode::Verdict, 200, 1);
  REQUIRE_FALSE(v1Report.failures.empty());
  const auto& cex = v1Report.failures[0].counterexample;
  CHECK(replayCounterexample(v1.equation.lhs, v1.equation.rhs, cex, kAB, EquivMode::Verdict));
  CHECK(soundnessFuzz(instantiate(Schema::V1, {}, kA), kA, EquivMode::Verdict, 200, 1).failures.empty());
}

TEST_CASE("property: every listed instance is sound under enumerated substitutions") {
  struct Case {
    SystemName system;
    Alphabet alphabet;
    EquivMode mode;
  };
  const std::vector<Case> cases{
      {SystemName::EvfPrime, kAB, EquivMode::Verdict},
      {SystemName::EomegafPrime, kAB, EquivMode::OmegaVerdict},
      {SystemName::Ev1Prime, kA, EquivMode::Verdict},
      {SystemName::Eomega1Prime, kA, EquivMode::OmegaVerdict},
  };
  for (const auto& c : cases) {
    for (const auto& inst : listSystem(c.system, c.alphabet, SchemaBounds{2, 2})) {
      const auto& eq = inst.equation;
      OracleOptions opt;
      opt.cap = 512;
      auto r = oracleEquivOpen(eq.lhs, eq.rhs, c.alphabet, c.mode, 2, opt);
      REQUIRE_MESSAGE(r.equivalent, schemaName(inst.schema) << ": " << printEquation(eq));
    }
  }
}
