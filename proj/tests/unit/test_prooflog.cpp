// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"
#include "monalg/equivalence.hpp"
#include "monalg/normalize.hpp"
#include "monalg/prooflog.hpp"
#include "support.hpp"

using namespace monalg;
using namespace monalg::testing;

namespace {

const Alphabet kAB = Alphabet::finite({"a", "b"});

std::optional<CheckError> check(const std::string& text, const std::optional<Equation>& claim = std::nullopt) {
  return checkDerivation(readDerivation(text), claim);
}

// Equivalence of the two sides of a step in the system's own notion of
// equivalence, checked on enumerated closed instances.
bool stepSound(const Equation& eq, const Alphabet& alphabet, EquivMode mode) {
  return oracleEquivOpen(eq.lhs, eq.rhs, alphabet, mode, 2, OracleOptions{256, 1, false}).equivalent;
}

}  // namespace

TEST_CASE("hand-written derivations") {
  const std::string yes =
      "system: Ev\n"
      "alphabet: a,b\n"
      "step 1: yes = yes + a.yes by Axiom(Y_a; a=a)\n"
      "step 2: yes + a.yes = yes by Symmetry(1)\n"
      "step 3: b.(yes + a.yes) = b.yes by CongruencePrefix(b, 2)\n"
      "step 4: no = no by Reflexivity\n"
      "step 5: b.(yes + a.yes) + no = b.yes + no by CongruenceSum(3, 4)\n";
  CHECK_FALSE(check(yes).has_value());
  CHECK_FALSE(check(yes, parseEquation("b.(yes + a.yes) + no = b.yes + no", kAB)).has_value());

  auto mismatch = check(yes, parseEquation("yes = no", kAB));
  REQUIRE(mismatch.has_value());
  CHECK((mismatch->kind == CheckErrorKind::ConclusionMismatch));

  const std::string subst =
      "system: Ev\n"
      "alphabet: a,b\n"
      "step 1: a.(x + y) = a.x + a.y by Axiom(D_a; a=a)\n"
      "step 2: a.(yes + no) = a.yes + a.no by Substitutivity(1; x -> yes, y -> no)\n"
      "step 3: a.(yes + no) = a.yes + a.no by Axiom(D_a; a=a; x -> yes, y -> no)\n"
      "step 4: a.yes + a.no = a.yes + a.no by Transitivity(2, 3)\n";
  auto bad = check(subst);
  REQUIRE(bad.has_value());
  CHECK(bad->stepId == 4);
  CHECK((bad->kind == CheckErrorKind::ShapeMismatch));
}

TEST_CASE("checker error kinds") {
  auto dangling = check("system: Ev\nalphabet: a\nstep 1: yes = yes by Symmetry(2)\n");
  REQUIRE(dangling.has_value());
  CHECK((dangling->kind == CheckErrorKind::DanglingReference));

  auto notInSystem = check("system: Ev'\nalphabet: a\nstep 1: x = x + a.x by Axiom(V1; a=a)\n");
  REQUIRE(notInSystem.has_value());
  CHECK((notInSystem->kind == CheckErrorKind::AxiomNotInSystem));
  CHECK_FALSE(check("system: Ev1'\nalphabet: a\nstep 1: x = x + a.x by Axiom(V1; a=a)\n").has_value());

  auto notInstance = check("system: Ev\nalphabet: a,b\nstep 1: yes = yes + b.yes by Axiom(Y_a; a=a)\n");
  REQUIRE(notInstance.has_value());
  CHECK((notInstance->kind == CheckErrorKind::NotAnInstance));

  auto refl = check("system: Ev\nalphabet: a\nstep 1: yes = no by Reflexivity\n");
  REQUIRE(refl.has_value());
  CHECK(refl->stepId == 1);

  auto o2 = check("system: Evf'\nalphabet: a,b\nbounds: s=1 k=1\n"
                  "step 1: x = x by Reflexivity\n"
                  "step 2: yes = yes by Axiom(O2; s=a.b; k=1)\n");
  CHECK(o2.has_value());

  CHECK_THROWS_AS(readDerivation("system: Ev\nstep 1: yes = yes by Nonsense\n"), ParseError);
  CHECK_THROWS_AS(readDerivation("system: Nope\nalphabet: a\nstep 1: yes = yes by Reflexivity\n"), ParseError);
}

TEST_CASE("write and read round trip") {
  Equation claim = parseEquation("x + yes + a.b.(no + b.a.x) = x + yes + a.b.no", kAB);
  auto d = proveEquation(FormKind::OpenRNF, claim, kAB);
  REQUIRE(d.has_value());
  std::string text = writeDerivation(*d);
  Derivation back = readDerivation(text);
  CHECK(writeDerivation(back) == text);
  CHECK(back.steps.size() == d->steps.size());
  CHECK_FALSE(checkDerivation(back, claim).has_value());

  TermContext ctx{Alphabet::openEnded(), {"x"}};
  auto open = normalize(FormKind::OpenRNF, parseMonitor("x + go.(yes + x) + yes", ctx), Alphabet::openEnded(), true);
  Derivation openBack = readDerivation(writeDerivation(*open.derivation));
  CHECK_FALSE(checkDerivation(openBack).has_value());
}

TEST_CASE("property: single-step mutations are rejected") {
  TermGen gen(70);
  int mutated = 0;
  for (int i = 0; i < 40; ++i) {
    Monitor m = gen.term(openConfig(3));
    auto out = normalize(FormKind::FinRNF, m, kAB, true);
    const Derivation& d = *out.derivation;
    const Equation claim{m, out.term};
    REQUIRE_FALSE(checkDerivation(d, claim).has_value());
    for (std::size_t k = 0; k < d.steps.size(); ++k) {
      Derivation bad = d;
      Equation& eq = bad.steps[k].equation;
      eq.rhs = Monitor::sum(eq.rhs, Monitor::prefix("b", Monitor::no()));
      REQUIRE_MESSAGE(checkDerivation(bad, claim).has_value(), "step " << k + 1);
      ++mutated;
    }
    if (d.steps.size() > 1) {
      Derivation bad = d;
      bad.steps.erase(bad.steps.begin() + static_cast<std::ptrdiff_t>(bad.steps.size() / 2));
      REQUIRE(checkDerivation(bad, claim).has_value());
    }
  }
  CHECK(mutated > 0);
}

TEST_CASE("property: every checked step is sound") {
  TermGen gen(71);
  for (int i = 0; i < 25; ++i) {
    Monitor m = gen.term(openConfig(2));
    for (FormKind kind : {FormKind::FinRNF, FormKind::OpenOmegaNF}) {
      auto out = normalize(kind, m, kAB, true);
      const EquivMode mode = kind == FormKind::OpenOmegaNF ? EquivMode::OmegaVerdict : EquivMode::Verdict;
      REQUIRE_FALSE(checkDerivation(*out.derivation).has_value());
      for (const auto& step : out.derivation->steps) REQUIRE(stepSound(step.equation, kAB, mode));
    }
  }
}
