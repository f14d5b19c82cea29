// SPDX-License-Identifier: Apache-2.0
#include "monalg/proof_builder.hpp"

#include <functional>
#include <stdexcept>

#include "monalg/syntax.hpp"

namespace monalg {

namespace {

bool reflexive(const Proof& p) { return p.id == 0; }

Substitution subst(std::initializer_list<std::pair<const char*, Monitor>> items) {
  Substitution sigma;
  for (const auto& [var, image] : items) sigma.set(var, image);
  return sigma;
}

Bindings withAction(const std::string& a) { return Bindings{a, std::nullopt, std::nullopt}; }

[[noreturn]] void mismatch(const char* where, const Monitor& a, const Monitor& b) {
  throw std::logic_error(std::string(where) + ": " + printMonitor(a) + " vs " + printMonitor(b));
}

}  // namespace

std::size_t ProofBuilder::emit(const Equation& eq, Justification j) {
  std::size_t id = steps_.size() + 1;
  steps_.push_back(Step{id, eq, std::move(j)});
  return id;
}

std::size_t ProofBuilder::materialize(const Proof& p) {
  if (p.id != 0) return p.id;
  return emit({p.lhs, p.rhs}, Justification{});
}

Proof ProofBuilder::axiom(Schema schema, const Bindings& bindings, const Substitution& sigma) {
  Equation eq = applySubst(sigma, instantiate(schema, bindings, alphabet_).equation);
  Justification j;
  j.rule = Rule::Axiom;
  j.schema = schema;
  j.bindings = bindings;
  j.sigma = sigma;
  return Proof{eq.lhs, eq.rhs, emit(eq, std::move(j))};
}

Proof ProofBuilder::sym(const Proof& p) {
  if (reflexive(p)) return p;
  Justification j;
  j.rule = Rule::Symmetry;
  j.first = p.id;
  return Proof{p.rhs, p.lhs, emit({p.rhs, p.lhs}, std::move(j))};
}

Proof ProofBuilder::trans(const Proof& p, const Proof& q) {
  if (!(p.rhs == q.lhs)) mismatch("trans", p.rhs, q.lhs);
  if (reflexive(p)) return q;
  if (reflexive(q)) return p;
  Justification j;
  j.rule = Rule::Transitivity;
  j.first = p.id;
  j.second = q.id;
  return Proof{p.lhs, q.rhs, emit({p.lhs, q.rhs}, std::move(j))};
}

Proof ProofBuilder::trans(std::initializer_list<Proof> chain) {
  auto it = chain.begin();
  Proof acc = *it;
  for (++it; it != chain.end(); ++it) acc = trans(acc, *it);
  return acc;
}

Proof ProofBuilder::congSum(const Proof& p, const Proof& q) {
  Monitor lhs = Monitor::sum(p.lhs, q.lhs);
  Monitor rhs = Monitor::sum(p.rhs, q.rhs);
  if (reflexive(p) && reflexive(q)) return refl(lhs);
  Justification j;
  j.rule = Rule::CongruenceSum;
  j.first = materialize(p);
  j.second = materialize(q);
  return Proof{lhs, rhs, emit({lhs, rhs}, std::move(j))};
}

Proof ProofBuilder::congPrefix(const std::string& action, const Proof& p) {
  Monitor lhs = Monitor::prefix(action, p.lhs);
  Monitor rhs = Monitor::prefix(action, p.rhs);
  if (reflexive(p)) return refl(lhs);
  Justification j;
  j.rule = Rule::CongruencePrefix;
  j.first = p.id;
  j.action = action;
  return Proof{lhs, rhs, emit({lhs, rhs}, std::move(j))};
}

Proof ProofBuilder::congChain(const Trace& t, const Proof& p) {
  Proof acc = p;
  for (auto it = t.rbegin(); it != t.rend(); ++it) acc = congPrefix(*it, acc);
  return acc;
}

namespace {

// Keeps only the steps the last step depends on, renumbered from 1.
std::vector<Step> pruneUnused(std::vector<Step> steps) {
  if (steps.empty()) return steps;
  std::vector<bool> used(steps.size() + 1, false);
  used[steps.size()] = true;
  for (std::size_t id = steps.size(); id >= 1; --id) {
    if (!used[id]) continue;
    const Justification& j = steps[id - 1].justification;
    switch (j.rule) {
      case Rule::Transitivity:
      case Rule::CongruenceSum: used[j.second] = true; [[fallthrough]];
      case Rule::Symmetry:
      case Rule::CongruencePrefix:
      case Rule::Substitutivity: used[j.first] = true; break;
      case Rule::Axiom:
      case Rule::Reflexivity: break;
    }
  }
  std::vector<std::size_t> renumber(steps.size() + 1, 0);
  std::vector<Step> out;
  for (std::size_t id = 1; id <= steps.size(); ++id) {
    if (!used[id]) continue;
    Step st = std::move(steps[id - 1]);
    renumber[id] = out.size() + 1;
    st.id = renumber[id];
    Justification& j = st.justification;
    if (j.first) j.first = renumber[j.first];
    if (j.second) j.second = renumber[j.second];
    out.push_back(std::move(st));
  }
  return out;
}

}  // namespace

Derivation ProofBuilder::finish(const Proof& result) {
  if (result.id == 0 || result.id != steps_.size()) {
    std::size_t id = materialize(result);
    if (id != steps_.size()) {
      // Re-state the result as the final step.
      Justification j;
      j.rule = Rule::Symmetry;
      j.first = id;
      std::size_t flipped = emit({result.rhs, result.lhs}, j);
      j.first = flipped;
      emit({result.lhs, result.rhs}, j);
    }
  }
  Derivation d;
  d.system = system_;
  d.alphabet = alphabet_;
  d.steps = pruneUnused(std::move(steps_));
  steps_.clear();
  return d;
}

Proof ProofBuilder::acInsert(const Monitor& l, const Monitor& s) {
  if (l.kind() == Kind::End) {
    return trans(axiom(Schema::A1, {}, subst({{"x", l}, {"y", s}})), axiom(Schema::A4, {}, subst({{"x", s}})));
  }
  if (l.kind() != Kind::Sum) {
    auto c = compare(l, s);
    if (c < 0) return refl(Monitor::sum(l, s));
    if (c == 0) return axiom(Schema::A3, {}, subst({{"x", l}}));
    return axiom(Schema::A1, {}, subst({{"x", l}, {"y", s}}));
  }
  const Monitor& init = l.left();
  const Monitor& last = l.right();
  auto c = compare(last, s);
  if (c < 0) return refl(Monitor::sum(l, s));
  if (c == 0) {
    Proof reassoc = sym(axiom(Schema::A2, {}, subst({{"x", init}, {"y", last}, {"z", last}})));
    return trans(reassoc, congSum(refl(init), axiom(Schema::A3, {}, subst({{"x", last}}))));
  }
  Proof p1 = sym(axiom(Schema::A2, {}, subst({{"x", init}, {"y", last}, {"z", s}})));
  Proof p2 = congSum(refl(init), axiom(Schema::A1, {}, subst({{"x", last}, {"y", s}})));
  Proof p3 = axiom(Schema::A2, {}, subst({{"x", init}, {"y", s}, {"z", last}}));
  Proof p4 = congSum(acInsert(init, s), refl(last));
  return trans({p1, p2, p3, p4});
}

Proof ProofBuilder::acMerge(const Monitor& l, const Monitor& r) {
  if (r.kind() == Kind::End) return axiom(Schema::A4, {}, subst({{"x", l}}));
  if (l.kind() == Kind::End) {
    return trans(axiom(Schema::A1, {}, subst({{"x", l}, {"y", r}})), axiom(Schema::A4, {}, subst({{"x", r}})));
  }
  if (r.kind() != Kind::Sum) return acInsert(l, r);
  Proof p1 = axiom(Schema::A2, {}, subst({{"x", l}, {"y", r.left()}, {"z", r.right()}}));
  Proof merged = acMerge(l, r.left());
  Proof p2 = congSum(merged, refl(r.right()));
  return trans({p1, p2, acInsert(merged.rhs, r.right())});
}

Proof ProofBuilder::acNormTop(const Monitor& m) {
  if (m.kind() != Kind::Sum) return refl(m);
  Proof parts = congSum(acNormTop(m.left()), acNormTop(m.right()));
  return trans(parts, acMerge(parts.rhs.left(), parts.rhs.right()));
}

Proof ProofBuilder::acBridge(const Monitor& m, const Monitor& n) {
  Proof a = acNormTop(m);
  Proof b = acNormTop(n);
  return trans(a, sym(b));
}

Proof ProofBuilder::acCanonize(const Monitor& m) {
  switch (m.kind()) {
    case Kind::Prefix: return congPrefix(m.name(), acCanonize(m.body()));
    case Kind::Sum: {
      // Canonicalize every summand in place, then sort the top level.
      std::function<Proof(const Monitor&)> leaves = [&](const Monitor& t) -> Proof {
        if (t.kind() == Kind::Sum) return congSum(leaves(t.left()), leaves(t.right()));
        return acCanonize(t);
      };
      Proof inner = leaves(m);
      return trans(inner, acNormTop(inner.rhs));
    }
    default: return refl(m);
  }
}

Proof ProofBuilder::acAlign(const Monitor& m, const Monitor& n) {
  Proof a = acCanonize(m);
  Proof b = acCanonize(n);
  return trans(a, sym(b));
}

Monitor pushPrefix(const Trace& t, const Monitor& m) {
  if (m.kind() == Kind::Sum) return Monitor::sum(pushPrefix(t, m.left()), pushPrefix(t, m.right()));
  return prefixSeq(t, m);
}

Proof ProofBuilder::distrib(const Trace& t, const Monitor& x, const Monitor& y) {
  if (t.empty()) return refl(Monitor::sum(x, y));
  Trace rest(t.begin() + 1, t.end());
  Proof inner = congPrefix(t.front(), distrib(rest, x, y));
  Proof outer = axiom(Schema::D_a, withAction(t.front()),
                      subst({{"x", prefixSeq(rest, x)}, {"y", prefixSeq(rest, y)}}));
  return trans(inner, outer);
}

Proof ProofBuilder::distribAll(const Trace& t, const Monitor& m) {
  if (m.kind() != Kind::Sum || t.empty()) return refl(pushPrefix(t, m));
  Proof top = distrib(t, m.left(), m.right());
  return trans(top, congSum(distribAll(t, m.left()), distribAll(t, m.right())));
}

Proof ProofBuilder::explode(const Monitor& m) {
  switch (m.kind()) {
    case Kind::Sum: {
      Proof parts = congSum(explode(m.left()), explode(m.right()));
      return trans(parts, acMerge(parts.rhs.left(), parts.rhs.right()));
    }
    case Kind::Prefix: {
      Proof inner = congPrefix(m.name(), explode(m.body()));
      const Monitor& body = inner.rhs.body();
      if (body.kind() == Kind::End) return trans(inner, axiom(Schema::E_a, withAction(m.name())));
      return trans(inner, distribAll({m.name()}, body));
    }
    default: return refl(m);
  }
}

namespace {

// x = x + u.x by induction on u, from base(a): x = x + a.x.
template <class Base>
Proof absorbChain(ProofBuilder& pb, const Trace& u, const Monitor& x, Base base) {
  const std::string& a = u.front();
  Proof step = base(a);
  if (u.size() == 1) return step;
  Trace rest(u.begin() + 1, u.end());
  Proof ih = absorbChain(pb, rest, x, base);
  Monitor tail = prefixSeq(rest, x);
  Proof under = pb.trans(pb.congPrefix(a, ih), pb.axiom(Schema::D_a, withAction(a), subst({{"x", x}, {"y", tail}})));
  Proof s1 = pb.congSum(pb.refl(x), under);
  Proof s2 = pb.axiom(Schema::A2, {}, subst({{"x", x}, {"y", Monitor::prefix(a, x)}, {"z", Monitor::prefix(a, tail)}}));
  Proof s3 = pb.congSum(pb.sym(step), pb.refl(Monitor::prefix(a, tail)));
  return pb.trans({step, s1, s2, s3});
}

}  // namespace

Proof ProofBuilder::verdictAbsorb(const Trace& u, const Monitor& v) {
  Schema schema = v.kind() == Kind::Yes ? Schema::Y_a : Schema::N_a;
  return absorbChain(*this, u, v, [&](const std::string& a) { return axiom(schema, withAction(a)); });
}

Proof ProofBuilder::varAbsorb(const std::string& action, unsigned n, const Monitor& x) {
  Trace u(n, action);
  return absorbChain(*this, u, x, [&](const std::string& a) {
    return axiom(Schema::V1, withAction(a), subst({{"x", x}}));
  });
}

Proof ProofBuilder::absorbAtom(const Trace& t, const Trace& u, const Monitor& v) {
  Proof split = sym(distrib(t, v, prefixSeq(u, v)));
  return trans(split, congChain(t, sym(verdictAbsorb(u, v))));
}

Proof ProofBuilder::absorbVarAtom(const Trace& t, const std::string& action, unsigned n, const Monitor& x) {
  Proof split = sym(distrib(t, x, prefixSeq(Trace(n, action), x)));
  return trans(split, congChain(t, sym(varAbsorb(action, n, x))));
}

Proof ProofBuilder::killUnderBoth(const Trace& q, const Monitor& z) {
  Monitor yes = Monitor::yes();
  Monitor no = Monitor::no();
  Monitor both = Monitor::sum(yes, no);
  Proof joinVerdicts = congSum(sym(distrib(q, yes, no)), refl(prefixSeq(q, z)));
  Proof joinAll = sym(distrib(q, both, z));
  Proof kill = congChain(q, sym(axiom(Schema::O1, {}, subst({{"x", z}}))));
  return trans({joinVerdicts, joinAll, kill, distrib(q, yes, no)});
}

Proof ProofBuilder::collapseFan(const Trace& t, const Monitor& v) {
  Schema schema = v.kind() == Kind::Yes ? Schema::Y_omega : Schema::N_omega;
  Proof spread = sym(distribAll(t, fan(v, alphabet_)));
  return trans(spread, congChain(t, sym(axiom(schema))));
}

Proof ProofBuilder::dropByCover(const Trace& p, const Trace& s, unsigned k, const Monitor& x) {
  Monitor cover = barK(s, k, Monitor::sum(Monitor::yes(), Monitor::no()), alphabet_);
  Monitor before = prefixSeq(p, Monitor::sum(Monitor::sum(x, prefixSeq(s, x)), cover));
  Monitor after = prefixSeq(p, Monitor::sum(x, cover));
  Proof in = sym(explode(before));
  Proof o2 = congChain(p, axiom(Schema::O2, Bindings{std::nullopt, s, k}, subst({{"x", x}})));
  return trans({in, o2, explode(after)});
}

Proof ProofBuilder::stripPrefixes(const Monitor& m) {
  switch (m.kind()) {
    case Kind::Prefix: {
      Proof inner = congPrefix(m.name(), stripPrefixes(m.body()));
      Proof drop = sym(axiom(Schema::V1_omega, withAction(m.name()), subst({{"x", inner.rhs.body()}})));
      return trans(inner, drop);
    }
    case Kind::Sum: return congSum(stripPrefixes(m.left()), stripPrefixes(m.right()));
    default: return refl(m);
  }
}

Atom splitAtom(const Monitor& atom) {
  Atom out;
  const Monitor* cur = &atom;
  while (cur->kind() == Kind::Prefix) {
    out.trace.push_back(cur->name());
    cur = &cur->body();
  }
  out.leaf = *cur;
  return out;
}

}  // namespace monalg
