// SPDX-License-Identifier: Apache-2.0
//
// Incremental construction of derivations, plus the derived lemmas used by
// the normalization pipelines. Every method returns a Proof of an equation
// whose sides are stated in its comment; steps are appended to the builder.
#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "monalg/axioms.hpp"
#include "monalg/prooflog.hpp"
#include "monalg/term.hpp"

namespace monalg {

// A proven equation. id == 0 marks a reflexive proof not yet written out.
struct Proof {
  Monitor lhs;
  Monitor rhs;
  std::size_t id = 0;
};

class ProofBuilder {
 public:
  ProofBuilder(SystemName system, Alphabet alphabet) : system_(system), alphabet_(std::move(alphabet)) {}

  const Alphabet& alphabet() const { return alphabet_; }

  Proof axiom(Schema schema, const Bindings& bindings = {}, const Substitution& sigma = {});
  Proof refl(const Monitor& m) const { return Proof{m, m, 0}; }
  Proof sym(const Proof& p);
  Proof trans(const Proof& p, const Proof& q);
  Proof trans(std::initializer_list<Proof> chain);
  Proof congSum(const Proof& p, const Proof& q);
  Proof congPrefix(const std::string& action, const Proof& p);
  // t.lhs = t.rhs
  Proof congChain(const Trace& t, const Proof& p);

  // Derivation whose last step is `result`.
  Derivation finish(const Proof& result);

  // --- AC engine. A canonical list is end, a single summand, or a
  // left-associated sum of summands in strictly increasing canonical order.

  // l + r = canonical union, for canonical lists l and r.
  Proof acMerge(const Monitor& l, const Monitor& r);
  // l + s = canonical union, for a canonical list l and a single summand s.
  Proof acInsert(const Monitor& l, const Monitor& s);
  // m = fromSumForm(toSumForm(m))
  Proof acNormTop(const Monitor& m);
  // m = n when both have the same top-level summand set.
  Proof acBridge(const Monitor& m, const Monitor& n);
  // m = acCanon(m)
  Proof acCanonize(const Monitor& m);
  // m = n for acEqual terms.
  Proof acAlign(const Monitor& m, const Monitor& n);

  // --- Lemmas.

  // t.(x + y) = t.x + t.y
  Proof distrib(const Trace& t, const Monitor& x, const Monitor& y);
  // t.m = pushPrefix(t, m)
  Proof distribAll(const Trace& t, const Monitor& m);
  // m = sum of its atoms (prefix chains ending in yes, no or a variable), as
  // a canonical list.
  Proof explode(const Monitor& m);
  // v = v + u.v for a verdict v and nonempty u (Y_a / N_a).
  Proof verdictAbsorb(const Trace& u, const Monitor& v);
  // x = x + a^n.x for n >= 1 (V1).
  Proof varAbsorb(const std::string& action, unsigned n, const Monitor& x);
  // t.v + t.u.v = t.v
  Proof absorbAtom(const Trace& t, const Trace& u, const Monitor& v);
  // t.x + t.a^n.x = t.x
  Proof absorbVarAtom(const Trace& t, const std::string& action, unsigned n, const Monitor& x);
  // (q.yes + q.no) + q.z = q.yes + q.no (O1)
  Proof killUnderBoth(const Trace& q, const Monitor& z);
  // pushPrefix(t, fan(v)) = t.v (Y_omega / N_omega)
  Proof collapseFan(const Trace& t, const Monitor& v);
  // explode(p.((x + s.x) + barK)) rhs = explode(p.(x + barK)) rhs (O2)
  Proof dropByCover(const Trace& p, const Trace& s, unsigned k, const Monitor& x);
  // m = m with every prefix removed (V1_omega)
  Proof stripPrefixes(const Monitor& m);

 private:
  std::size_t emit(const Equation& eq, Justification j);
  std::size_t materialize(const Proof& p);

  SystemName system_;
  Alphabet alphabet_;
  std::vector<Step> steps_;
};

// t pushed onto every summand of the sum tree m: t.(l + r) -> t.l + t.r.
Monitor pushPrefix(const Trace& t, const Monitor& m);

// Summands of an exploded term, split into trace and leaf.
struct Atom {
  Trace trace;
  Monitor leaf;  // yes, no or a variable
};
Atom splitAtom(const Monitor& atom);

}  // namespace monalg
