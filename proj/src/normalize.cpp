// SPDX-License-Identifier: Apache-2.0
#include "monalg/normalize.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <stdexcept>

#include "monalg/proof_builder.hpp"
#include "monalg/semantics.hpp"

namespace monalg {

namespace {

struct FormInfo {
  FormKind kind;
  std::string_view name;
  SystemName system;
};

constexpr std::array<FormInfo, 9> kForms{{
    {FormKind::NF, "nf", SystemName::Ev},
    {FormKind::RNF, "rnf", SystemName::Ev},
    {FormKind::OmegaNF, "omega", SystemName::Eomega},
    {FormKind::OpenNF, "open-nf", SystemName::Ev},
    {FormKind::OpenRNF, "open-rnf", SystemName::EvPrime},
    {FormKind::FinRNF, "fin-rnf", SystemName::EvfPrime},
    {FormKind::UnaryRNF, "unary-rnf", SystemName::Ev1Prime},
    {FormKind::UnaryOmegaNF, "unary-omega", SystemName::Eomega1Prime},
    {FormKind::OpenOmegaNF, "open-omega", SystemName::EomegafPrime},
}};

}  // namespace

std::string_view formName(FormKind kind) {
  for (const auto& f : kForms)
    if (f.kind == kind) return f.name;
  return "?";
}

std::optional<FormKind> parseFormName(std::string_view name) {
  for (const auto& f : kForms)
    if (f.name == name) return f.kind;
  return std::nullopt;
}

const std::vector<FormKind>& allForms() {
  static const std::vector<FormKind> all = [] {
    std::vector<FormKind> v;
    for (const auto& f : kForms) v.push_back(f.kind);
    return v;
  }();
  return all;
}

SystemName formSystem(FormKind kind) {
  for (const auto& f : kForms)
    if (f.kind == kind) return f.system;
  return SystemName::Ev;
}

std::vector<Trace> leafTraces(const Monitor& m, Kind leaf) {
  std::vector<Trace> out;
  Trace path;
  std::function<void(const Monitor&)> walk = [&](const Monitor& t) {
    switch (t.kind()) {
      case Kind::Sum:
        walk(t.left());
        walk(t.right());
        return;
      case Kind::Prefix:
        path.push_back(t.name());
        walk(t.body());
        path.pop_back();
        return;
      default:
        if (t.kind() == leaf) out.push_back(path);
        return;
    }
  };
  walk(m);
  return out;
}

namespace {

void sortUnique(std::vector<Monitor>& v) {
  std::sort(v.begin(), v.end(), MonitorLess{});
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

void collectAtoms(const Monitor& m, const Trace& prefix, std::vector<Monitor>& out) {
  switch (m.kind()) {
    case Kind::End: return;
    case Kind::Sum:
      collectAtoms(m.left(), prefix, out);
      collectAtoms(m.right(), prefix, out);
      return;
    case Kind::Prefix: {
      Trace next = prefix;
      next.push_back(m.name());
      collectAtoms(m.body(), next, out);
      return;
    }
    default: out.push_back(prefixSeq(prefix, m));
  }
}

std::vector<Monitor> atomsOf(const Monitor& m) {
  std::vector<Monitor> out;
  collectAtoms(m, {}, out);
  sortUnique(out);
  return out;
}

Trace concat(const Trace& a, const Trace& b) {
  Trace out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

struct TrieNode {
  bool yes = false;
  bool no = false;
  std::set<std::string> vars;
  std::map<std::string, TrieNode> children;
};

Monitor build(const TrieNode& node) {
  std::vector<Monitor> parts;
  if (node.yes) parts.push_back(Monitor::yes());
  if (node.no) parts.push_back(Monitor::no());
  for (const auto& [a, child] : node.children) parts.push_back(Monitor::prefix(a, build(child)));
  for (const auto& x : node.vars) parts.push_back(Monitor::var(x));
  return sumOf(parts);
}

Monitor implode(const std::vector<Monitor>& atoms) {
  TrieNode root;
  for (const auto& atom : atoms) {
    Atom at = splitAtom(atom);
    TrieNode* node = &root;
    for (const auto& a : at.trace) node = &node->children[a];
    switch (at.leaf.kind()) {
      case Kind::Yes: node->yes = true; break;
      case Kind::No: node->no = true; break;
      case Kind::Var: node->vars.insert(at.leaf.name()); break;
      default: throw std::logic_error("implode: atom with bad leaf");
    }
  }
  return build(root);
}

class Pipeline {
 public:
  // Proof steps go to `pb` when it is set.
  Pipeline(const Alphabet& alphabet, ProofBuilder* pb) : alphabet_(alphabet), pb_(pb) {}

  void startExploded(const Monitor& m) {
    atoms_ = atomsOf(m);
    if (pb_) {
      cur_ = pb_->explode(m);
      checkCurrent();
    }
  }

  // Leaves only, after removing every prefix with V1_omega.
  void startStripped(const Monitor& m) {
    std::vector<Monitor> leaves;
    collectAtoms(m, {}, leaves);
    for (auto& l : leaves) l = splitAtom(l).leaf;
    sortUnique(leaves);
    atoms_ = leaves;
    if (pb_) {
      Proof strip = pb_->stripPrefixes(m);
      cur_ = pb_->trans(strip, pb_->acNormTop(strip.rhs));
      checkCurrent();
    }
  }

  bool has(const Monitor& atom) const { return std::binary_search(atoms_.begin(), atoms_.end(), atom, MonitorLess{}); }

  std::vector<Trace> verdictTraces(Kind v) const {
    std::vector<Trace> out;
    for (const auto& a : atoms_) {
      Atom at = splitAtom(a);
      if (at.leaf.kind() == v) out.push_back(at.trace);
    }
    return out;
  }

  // Replace the atoms `from` by `to`, justified by lemma: sum(from) = sum(to).
  void apply(std::vector<Monitor> from, std::vector<Monitor> to, const std::function<Proof(ProofBuilder&)>& lemma) {
    sortUnique(from);
    sortUnique(to);
    std::vector<Monitor> rest;
    std::set_difference(atoms_.begin(), atoms_.end(), from.begin(), from.end(), std::back_inserter(rest), MonitorLess{});
    std::vector<Monitor> next = rest;
    next.insert(next.end(), to.begin(), to.end());
    sortUnique(next);
    if (pb_) {
      Proof l = lemma(*pb_);
      if (!(toSumForm(l.lhs).summands == from) || !(toSumForm(l.rhs).summands == to))
        throw std::logic_error("lemma does not match the atoms it rewrites");
      Monitor restSum = sumOf(rest);
      Monitor mid = rest.empty() ? l.lhs : Monitor::sum(restSum, l.lhs);
      Proof s1 = pb_->acBridge(sumOf(atoms_), mid);
      Proof s2 = rest.empty() ? l : pb_->congSum(pb_->refl(restSum), l);
      Proof s3 = pb_->acBridge(s2.rhs, sumOf(next));
      cur_ = pb_->trans({cur_, s1, s2, s3});
    }
    atoms_ = std::move(next);
    if (pb_) checkCurrent();
  }

  void dropAbsorbedVerdicts() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& atom : atoms_) {
        Atom at = splitAtom(atom);
        if (at.leaf.kind() != Kind::Yes && at.leaf.kind() != Kind::No) continue;
        for (std::size_t i = 0; i < at.trace.size(); ++i) {
          Trace p(at.trace.begin(), at.trace.begin() + static_cast<long>(i));
          Monitor shorter = prefixSeq(p, at.leaf);
          if (!has(shorter)) continue;
          Trace u(at.trace.begin() + static_cast<long>(i), at.trace.end());
          Monitor leaf = at.leaf;
          apply({shorter, atom}, {shorter}, [=](ProofBuilder& pb) { return pb.absorbAtom(p, u, leaf); });
          changed = true;
          break;
        }
        if (changed) break;
      }
    }
  }

  void collapseFans() {
    const auto& actions = alphabet_.actions();
    while (true) {
      std::optional<std::pair<Trace, Monitor>> best;
      for (Kind v : {Kind::Yes, Kind::No}) {
        Monitor leaf = v == Kind::Yes ? Monitor::yes() : Monitor::no();
        for (const auto& t : verdictTraces(v)) {
          if (t.empty()) continue;
          Trace parent(t.begin(), t.end() - 1);
          bool full = std::all_of(actions.begin(), actions.end(), [&](const std::string& a) {
            Trace child = parent;
            child.push_back(a);
            return has(prefixSeq(child, leaf));
          });
          if (!full) continue;
          if (!best || parent.size() > best->first.size()) best = std::make_pair(parent, leaf);
        }
      }
      if (!best) return;
      auto [parent, leaf] = *best;
      std::vector<Monitor> from;
      for (const auto& a : actions) from.push_back(prefixSeq(concat(parent, {a}), leaf));
      apply(from, {prefixSeq(parent, leaf)}, [=](ProofBuilder& pb) { return pb.collapseFan(parent, leaf); });
      dropAbsorbedVerdicts();
    }
  }

  bool inBoth(const Trace& t) const {
    return coneContains(verdictTraces(Kind::Yes), t) && coneContains(verdictTraces(Kind::No), t);
  }

  // Adds q.v, justified by a shorter p.v already present.
  void addVerdict(const Trace& q, const Monitor& v) {
    Monitor target = prefixSeq(q, v);
    if (has(target)) return;
    for (std::size_t i = 0; i < q.size(); ++i) {
      Trace p(q.begin(), q.begin() + static_cast<long>(i));
      Monitor shorter = prefixSeq(p, v);
      if (!has(shorter)) continue;
      Trace u(q.begin() + static_cast<long>(i), q.end());
      apply({shorter}, {shorter, target}, [=](ProofBuilder& pb) { return pb.sym(pb.absorbAtom(p, u, v)); });
      return;
    }
    throw std::logic_error("addVerdict: trace is not covered");
  }

  void killVarsUnderBoth() {
    std::vector<Atom> victims;
    for (const auto& atom : atoms_) {
      Atom at = splitAtom(atom);
      if (at.leaf.kind() == Kind::Var && inBoth(at.trace)) victims.push_back(at);
    }
    for (const auto& at : victims) {
      Monitor yes = prefixSeq(at.trace, Monitor::yes());
      Monitor no = prefixSeq(at.trace, Monitor::no());
      if (pb_) {
        addVerdict(at.trace, Monitor::yes());
        addVerdict(at.trace, Monitor::no());
        Trace q = at.trace;
        Monitor x = at.leaf;
        apply({yes, no, prefixSeq(q, x)}, {yes, no}, [=](ProofBuilder& pb) { return pb.killUnderBoth(q, x); });
      } else {
        apply({prefixSeq(at.trace, at.leaf)}, {}, nullptr);
      }
    }
    dropAbsorbedVerdicts();
  }

  // Removes occurrences of each variable that add nothing beyond shorter
  // occurrences of the same variable and the traces both accepted and
  // rejected. `unary` selects V1 for the derivation instead of O2.
  void dropRedundantOccurrences(bool unary) {
    auto yes = verdictTraces(Kind::Yes);
    auto no = verdictTraces(Kind::No);
    std::size_t depthBound = 0;
    for (const auto& t : yes) depthBound = std::max(depthBound, t.size());
    for (const auto& t : no) depthBound = std::max(depthBound, t.size());
    auto inB = [&](const Trace& t) { return coneContains(yes, t) && coneContains(no, t); };

    std::map<std::string, std::vector<Trace>> occurrences;
    for (const auto& atom : atoms_) {
      Atom at = splitAtom(atom);
      if (at.leaf.kind() == Kind::Var) occurrences[at.leaf.name()].push_back(at.trace);
    }
    for (auto& [var, occs] : occurrences) {
      std::sort(occs.begin(), occs.end(), [](const Trace& a, const Trace& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
      });
      std::vector<Trace> kept;
      for (const auto& q : occs) {
        std::vector<Trace> shorter;
        for (const auto& p : kept)
          if (p.size() < q.size() && isPrefix(p, q)) shorter.push_back(p);
        if (!redundant(q, shorter, inB, depthBound)) {
          kept.push_back(q);
          continue;
        }
        removeOccurrence(Monitor::var(var), q, shorter, inB, depthBound, unary);
      }
    }
  }

  Monitor output() const { return implode(atoms_); }

  // input = output(); reflexive when the input is already the output. Only
  // with a builder.
  Proof conclude(const Monitor& input) {
    Monitor out = output();
    if (input == out) return pb_->refl(out);
    return pb_->trans(cur_, pb_->sym(pb_->explode(out)));
  }

 private:
  void checkCurrent() const {
    if (!(cur_.rhs == sumOf(atoms_))) throw std::logic_error("proof state out of sync with atoms");
  }

  bool redundant(const Trace& q, const std::vector<Trace>& rays, const std::function<bool(const Trace&)>& inB,
                 std::size_t depthBound) const {
    std::vector<Trace> periods;
    for (const auto& p : rays) periods.emplace_back(q.begin() + static_cast<long>(p.size()), q.end());
    std::size_t cap = depthBound + 2;
    for (const auto& v : periods) cap += v.size();
    const auto& actions = alphabet_.actions();
    std::function<bool(Trace&)> dfs = [&](Trace& w) -> bool {
      if (inB(concat(q, w))) return true;
      bool onRay = std::any_of(periods.begin(), periods.end(), [&](const Trace& v) {
        for (std::size_t i = 0; i < w.size(); ++i)
          if (w[i] != v[i % v.size()]) return false;
        return true;
      });
      if (!onRay) return false;
      if (w.size() > cap) return actions.size() == 1;
      for (const auto& c : actions) {
        w.push_back(c);
        bool ok = dfs(w);
        w.pop_back();
        if (!ok) return false;
      }
      return true;
    };
    Trace w;
    return dfs(w);
  }

  void removeOccurrence(const Monitor& x, const Trace& q, const std::vector<Trace>& shorter,
                        const std::function<bool(const Trace&)>& inB, std::size_t depthBound, bool unary) {
    Monitor target = prefixSeq(q, x);
    if (!pb_) {
      apply({target}, {}, nullptr);
      return;
    }
    if (unary) {
      if (shorter.empty()) throw std::logic_error("unary removal without a shorter occurrence");
      const Trace& p = shorter.back();
      std::string a = alphabet_.actions().front();
      unsigned n = static_cast<unsigned>(q.size() - p.size());
      apply({prefixSeq(p, x), target}, {prefixSeq(p, x)},
            [=](ProofBuilder& pb) { return pb.absorbVarAtom(p, a, n, x); });
      return;
    }
    for (auto it = shorter.rbegin(); it != shorter.rend(); ++it) {
      const Trace& p = *it;
      Trace s(q.begin() + static_cast<long>(p.size()), q.end());
      unsigned kmax = static_cast<unsigned>(depthBound / s.size()) + 3;
      for (unsigned k = 1; k <= kmax; ++k) {
        Monitor cover = barK(s, k, Monitor::sum(Monitor::yes(), Monitor::no()), alphabet_);
        auto leaves = leafTraces(cover, Kind::Yes);
        bool covered = std::all_of(leaves.begin(), leaves.end(), [&](const Trace& t) { return inB(concat(p, t)); });
        if (!covered) continue;
        for (const auto& t : leaves) {
          addVerdict(concat(p, t), Monitor::yes());
          addVerdict(concat(p, t), Monitor::no());
        }
        Monitor before = prefixSeq(p, Monitor::sum(Monitor::sum(x, prefixSeq(s, x)), cover));
        Monitor after = prefixSeq(p, Monitor::sum(x, cover));
        apply(atomsOf(before), atomsOf(after), [=](ProofBuilder& pb) { return pb.dropByCover(p, s, k, x); });
        dropAbsorbedVerdicts();
        return;
      }
    }
    throw NormalizeError(NormalizeErrorKind::DerivationUnavailable,
                         "occurrence of " + x.name() + " is redundant only through several shorter occurrences together; "
                         "no single O2 instance removes it");
  }

  Alphabet alphabet_;
  ProofBuilder* pb_ = nullptr;
  std::vector<Monitor> atoms_;
  Proof cur_;
};

void requireClosed(const Monitor& m, FormKind kind) {
  if (!isClosed(m))
    throw NonClosedInput("form '" + std::string(formName(kind)) + "' needs a closed monitor");
}

void requireFiniteAlphabet(const Monitor& m, const Alphabet& alphabet, FormKind kind, std::size_t minSize,
                           bool unary) {
  if (!alphabet.isFinite())
    throw NormalizeError(NormalizeErrorKind::InfiniteAlphabet,
                         "form '" + std::string(formName(kind)) + "' needs a finite alphabet");
  if (unary && alphabet.size() != 1)
    throw NormalizeError(NormalizeErrorKind::AlphabetNotUnary,
                         "form '" + std::string(formName(kind)) + "' needs a one-action alphabet");
  if (alphabet.size() < minSize)
    throw NormalizeError(NormalizeErrorKind::AlphabetTooSmall,
                         "form '" + std::string(formName(kind)) + "' needs at least " + std::to_string(minSize) +
                             " actions");
  (void)m;
}

}  // namespace

namespace {

void run(Pipeline& p, FormKind kind, const Monitor& m, const Alphabet& alphabet) {
  if (alphabet.isFinite())
    for (const auto& a : actionsOf(m))
      if (!alphabet.contains(a))
        throw NormalizeError(NormalizeErrorKind::UnknownAction, "action '" + a + "' is not in the alphabet");

  switch (kind) {
    case FormKind::NF:
      requireClosed(m, kind);
      p.startExploded(m);
      break;
    case FormKind::RNF:
      requireClosed(m, kind);
      p.startExploded(m);
      p.dropAbsorbedVerdicts();
      break;
    case FormKind::OmegaNF:
      requireClosed(m, kind);
      requireFiniteAlphabet(m, alphabet, kind, 1, false);
      p.startExploded(m);
      p.dropAbsorbedVerdicts();
      p.collapseFans();
      break;
    case FormKind::OpenNF:
      p.startExploded(m);
      break;
    case FormKind::OpenRNF:
      p.startExploded(m);
      p.dropAbsorbedVerdicts();
      p.killVarsUnderBoth();
      break;
    case FormKind::FinRNF:
      requireFiniteAlphabet(m, alphabet, kind, 2, false);
      p.startExploded(m);
      p.dropAbsorbedVerdicts();
      p.killVarsUnderBoth();
      p.dropRedundantOccurrences(false);
      break;
    case FormKind::UnaryRNF:
      requireFiniteAlphabet(m, alphabet, kind, 1, true);
      p.startExploded(m);
      p.dropAbsorbedVerdicts();
      p.killVarsUnderBoth();
      p.dropRedundantOccurrences(true);
      break;
    case FormKind::UnaryOmegaNF:
      requireFiniteAlphabet(m, alphabet, kind, 1, true);
      p.startStripped(m);
      p.killVarsUnderBoth();
      break;
    case FormKind::OpenOmegaNF:
      requireFiniteAlphabet(m, alphabet, kind, 2, false);
      p.startExploded(m);
      p.dropAbsorbedVerdicts();
      p.collapseFans();
      p.killVarsUnderBoth();
      p.dropRedundantOccurrences(false);
      break;
  }
}

}  // namespace

CanonicalForm normalize(FormKind kind, const Monitor& m, const Alphabet& alphabet, bool emitProof) {
  std::optional<ProofBuilder> pb;
  if (emitProof) pb.emplace(formSystem(kind), alphabet);
  Pipeline p(alphabet, pb ? &*pb : nullptr);
  run(p, kind, m, alphabet);
  CanonicalForm result{p.output(), std::nullopt, kind};
  if (pb) result.derivation = pb->finish(p.conclude(m));
  return result;
}

std::optional<Derivation> proveEquation(FormKind kind, const Equation& eq, const Alphabet& alphabet) {
  ProofBuilder pb(formSystem(kind), alphabet);
  Pipeline left(alphabet, &pb);
  run(left, kind, eq.lhs, alphabet);
  Pipeline right(alphabet, &pb);
  run(right, kind, eq.rhs, alphabet);
  if (!acEqual(left.output(), right.output())) return std::nullopt;
  Proof l = left.conclude(eq.lhs);
  Proof r = right.conclude(eq.rhs);
  return pb.finish(pb.trans({l, pb.acAlign(l.rhs, r.rhs), pb.sym(r)}));
}

std::optional<unsigned> coveringK(const Monitor& m, const Trace& s, const Alphabet& alphabet) {
  if (!alphabet.isFinite() || alphabet.size() < 2)
    throw NormalizeError(NormalizeErrorKind::AlphabetTooSmall, "coveringK needs a finite alphabet with two actions");
  Substitution toEnd;
  for (const auto& x : varsOf(m)) toEnd.set(x, Monitor::end());
  TraceLang lang = langOf(applySubst(toEnd, m), alphabet);
  unsigned kb = 1;
  while (kb * s.size() <= m.depth()) ++kb;
  Monitor both = Monitor::sum(Monitor::yes(), Monitor::no());
  for (unsigned k = 1; k <= kb + 1; ++k) {
    auto leaves = leafTraces(barK(s, k, both, alphabet), Kind::Yes);
    bool covered = std::all_of(leaves.begin(), leaves.end(), [&](const Trace& t) {
      return coneContains(lang.acceptMin, t) && coneContains(lang.rejectMin, t);
    });
    if (covered) return k;
  }
  return std::nullopt;
}

}  // namespace monalg
