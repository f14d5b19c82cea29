// SPDX-License-Identifier: Apache-2.0
#include "monalg/equivalence.hpp"

#include <algorithm>
#include <random>

#include "monalg/normalize.hpp"

namespace monalg {

std::string_view toString(EquivMode mode) {
  return mode == EquivMode::Verdict ? "verdict" : "omega";
}

std::string_view toString(Side side) {
  switch (side) {
    case Side::AcceptedOnlyByLeft: return "AcceptedOnlyByLeft";
    case Side::AcceptedOnlyByRight: return "AcceptedOnlyByRight";
    case Side::RejectedOnlyByLeft: return "RejectedOnlyByLeft";
    case Side::RejectedOnlyByRight: return "RejectedOnlyByRight";
  }
  return "?";
}

namespace {

bool shorterTrace(const Trace& a, const Trace& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

void requireClosed(const Monitor& m) {
  if (!isClosed(m)) throw NonClosedInput("closed term expected");
}

std::vector<std::string> jointActions(const Monitor& m, const Monitor& n, const Alphabet& alphabet) {
  if (alphabet.isFinite()) {
    for (const Monitor* t : {&m, &n})
      for (const auto& a : actionsOf(*t))
        if (!alphabet.contains(a)) throw Error("action '" + a + "' is not in the alphabet");
    return alphabet.actions();
  }
  auto set = actionsOf(m);
  auto more = actionsOf(n);
  set.insert(more.begin(), more.end());
  return {set.begin(), set.end()};
}

// Shortest minimal trace of one cone missing from the other.
void findGap(const std::vector<Trace>& mine, const std::vector<Trace>& theirs, Side side,
             std::optional<Counterexample>& best) {
  for (const auto& t : mine) {
    if (coneContains(theirs, t)) continue;
    if (!best || shorterTrace(t, best->trace)) best = Counterexample{{}, t, side};
  }
}

EquivResult compareLangs(const TraceLang& left, const TraceLang& right) {
  std::optional<Counterexample> best;
  findGap(left.acceptMin, right.acceptMin, Side::AcceptedOnlyByLeft, best);
  findGap(right.acceptMin, left.acceptMin, Side::AcceptedOnlyByRight, best);
  findGap(left.rejectMin, right.rejectMin, Side::RejectedOnlyByLeft, best);
  findGap(right.rejectMin, left.rejectMin, Side::RejectedOnlyByRight, best);
  return EquivResult{!best.has_value(), best};
}

TraceLang omegaLang(const Monitor& m, const std::vector<std::string>& actions, const Alphabet& alphabet) {
  TraceLang lang = langOver(m, actions);
  lang.acceptMin = omegaCanon(std::move(lang.acceptMin), alphabet);
  lang.rejectMin = omegaCanon(std::move(lang.rejectMin), alphabet);
  return lang;
}

bool earlier(const Counterexample& a, std::size_t ia, const Counterexample& b, std::size_t ib) {
  if (a.trace.size() != b.trace.size()) return a.trace.size() < b.trace.size();
  return ia < ib;
}

}  // namespace

EquivResult verdictEquivClosed(const Monitor& m, const Monitor& n, const Alphabet& alphabet) {
  requireClosed(m);
  requireClosed(n);
  auto actions = jointActions(m, n, alphabet);
  return compareLangs(langOver(m, actions), langOver(n, actions));
}

EquivResult omegaEquivClosed(const Monitor& m, const Monitor& n, const Alphabet& alphabet) {
  if (!alphabet.isFinite()) return verdictEquivClosed(m, n, alphabet);
  requireClosed(m);
  requireClosed(n);
  auto actions = jointActions(m, n, alphabet);
  return compareLangs(omegaLang(m, actions, alphabet), omegaLang(n, actions, alphabet));
}

EquivResult equivClosed(const Monitor& m, const Monitor& n, const Alphabet& alphabet, EquivMode mode) {
  return mode == EquivMode::Verdict ? verdictEquivClosed(m, n, alphabet) : omegaEquivClosed(m, n, alphabet);
}

std::vector<Monitor> valueSet(const Alphabet& alphabet, std::size_t d) {
  const Monitor both = Monitor::sum(Monitor::yes(), Monitor::no());
  std::vector<Monitor> out{Monitor::end(), Monitor::yes(), Monitor::no(), both};
  std::vector<Trace> layer{Trace{}};
  constexpr std::size_t kMaxValues = std::size_t{1} << 20;
  for (std::size_t len = 1; len <= d; ++len) {
    if (layer.size() * alphabet.size() * 3 + out.size() > kMaxValues)
      throw Error("substitution value set too large; lower the bound");
    std::vector<Trace> next;
    for (const auto& t : layer)
      for (const auto& a : alphabet.actions()) {
        Trace u = t;
        u.push_back(a);
        next.push_back(std::move(u));
      }
    for (const auto& t : next) {
      out.push_back(prefixSeq(t, Monitor::yes()));
      out.push_back(prefixSeq(t, Monitor::no()));
      out.push_back(prefixSeq(t, both));
    }
    layer = std::move(next);
  }
  return out;
}

std::vector<Substitution> substitutionFamily(const std::set<std::string>& vars, const Alphabet& alphabet,
                                             std::size_t d, const OracleOptions& options) {
  std::vector<std::string> names(vars.begin(), vars.end());
  if (names.empty()) return {Substitution{}};
  const auto values = valueSet(alphabet, d);
  const std::size_t width = values.size();

  bool fits = true;
  std::size_t total = 1;
  for (std::size_t i = 0; i < names.size() && fits; ++i) {
    if (total > options.cap / width) fits = false;
    total *= width;
  }
  fits = fits && total <= options.cap;

  std::vector<Substitution> out;
  auto build = [&](const std::vector<std::size_t>& pick) {
    Substitution s;
    for (std::size_t i = 0; i < names.size(); ++i) s.set(names[i], values[pick[i]]);
    return s;
  };

  if (fits) {
    std::vector<std::size_t> pick(names.size(), 0);
    for (;;) {
      out.push_back(build(pick));
      std::size_t i = names.size();
      while (i > 0 && ++pick[i - 1] == width) pick[--i] = 0;
      if (i == 0) break;
    }
    return out;
  }

  std::set<std::vector<std::size_t>> seen;
  auto add = [&](const std::vector<std::size_t>& pick) {
    if (seen.insert(pick).second) out.push_back(build(pick));
  };
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t v = 0; v < width; ++v) {
      std::vector<std::size_t> pick(names.size(), 0);
      pick[i] = v;
      add(pick);
    }
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::size_t> dist(0, width - 1);
  std::size_t attempts = 0;
  while (out.size() < options.cap && attempts < 8 * options.cap) {
    ++attempts;
    std::vector<std::size_t> pick(names.size());
    for (auto& p : pick) p = dist(rng);
    add(pick);
  }
  return out;
}

std::size_t defaultBound(const Monitor& m, const Monitor& n) { return depth(m) + depth(n) + 2; }

EquivResult oracleEquivOpen(const Monitor& m, const Monitor& n, const Alphabet& alphabet, EquivMode mode,
                            std::size_t d, const OracleOptions& options) {
  auto vars = varsOf(m);
  auto more = varsOf(n);
  vars.insert(more.begin(), more.end());

  // Over the open-ended alphabet the value set is built from the actions of
  // the terms plus a fresh one, so that traces leaving the terms are covered.
  Alphabet valueAlphabet = alphabet;
  if (!alphabet.isFinite()) {
    auto actions = actionsOf(m);
    auto extra = actionsOf(n);
    actions.insert(extra.begin(), extra.end());
    std::string fresh = "_probe";
    while (actions.count(fresh)) fresh += "_";
    actions.insert(fresh);
    valueAlphabet = Alphabet::finite({actions.begin(), actions.end()});
  }

  auto family = substitutionFamily(vars, valueAlphabet, d, options);
  std::optional<Counterexample> best;
  std::size_t bestIndex = 0;
  for (std::size_t i = 0; i < family.size(); ++i) {
    auto r = equivClosed(applySubst(family[i], m), applySubst(family[i], n), alphabet, mode);
    if (r.equivalent) continue;
    r.counterexample->substitution = family[i];
    if (!options.minimize) return r;
    if (!best || earlier(*r.counterexample, i, *best, bestIndex)) {
      best = r.counterexample;
      bestIndex = i;
    }
  }
  return EquivResult{!best.has_value(), best};
}

Substitution freshActionSubstitution(const Monitor& m, const Monitor& n) {
  auto actions = actionsOf(m);
  auto more = actionsOf(n);
  actions.insert(more.begin(), more.end());
  auto vars = varsOf(m);
  auto moreVars = varsOf(n);
  vars.insert(moreVars.begin(), moreVars.end());
  Substitution out;
  const Monitor both = Monitor::sum(Monitor::yes(), Monitor::no());
  for (const auto& x : vars) {
    std::string action = "_fx_" + x;
    while (actions.count(action)) action += "_";
    actions.insert(action);
    out.set(x, Monitor::prefix(action, both));
  }
  return out;
}

bool verdictEquivOpen(const Monitor& m, const Monitor& n, const Alphabet& alphabet) {
  if (!alphabet.isFinite()) {
    auto sigma = freshActionSubstitution(m, n);
    return verdictEquivClosed(applySubst(sigma, m), applySubst(sigma, n), alphabet).equivalent;
  }
  if (alphabet.size() == 1) return acEqual(unaryRNF(m, alphabet).term, unaryRNF(n, alphabet).term);
  return acEqual(finiteActRNF(m, alphabet).term, finiteActRNF(n, alphabet).term);
}

bool omegaEquivOpen(const Monitor& m, const Monitor& n, const Alphabet& alphabet) {
  if (!alphabet.isFinite()) return verdictEquivOpen(m, n, alphabet);
  if (alphabet.size() == 1) return acEqual(unaryOmegaNF(m, alphabet).term, unaryOmegaNF(n, alphabet).term);
  return acEqual(omegaOpenNF(m, alphabet).term, omegaOpenNF(n, alphabet).term);
}

bool equivOpen(const Monitor& m, const Monitor& n, const Alphabet& alphabet, EquivMode mode) {
  return mode == EquivMode::Verdict ? verdictEquivOpen(m, n, alphabet) : omegaEquivOpen(m, n, alphabet);
}

bool replayCounterexample(const Monitor& m, const Monitor& n, const Counterexample& cex, const Alphabet& alphabet,
                          EquivMode mode) {
  const Monitor left = applySubst(cex.substitution, m);
  const Monitor right = applySubst(cex.substitution, n);
  if (!isClosed(left) || !isClosed(right)) return false;
  const bool acceptSide = cex.side == Side::AcceptedOnlyByLeft || cex.side == Side::AcceptedOnlyByRight;
  const bool leftSide = cex.side == Side::AcceptedOnlyByLeft || cex.side == Side::RejectedOnlyByLeft;
  const Monitor& yesTerm = leftSide ? left : right;
  const Monitor& noTerm = leftSide ? right : left;

  if (mode == EquivMode::Verdict || !alphabet.isFinite()) {
    auto holds = [&](const Monitor& t) { return acceptSide ? accepts(t, cex.trace) : rejects(t, cex.trace); };
    return holds(yesTerm) && !holds(noTerm);
  }
  // Omega mode: the trace must lie in one canonical cone and outside the
  // other, so that some infinite extension separates the two terms.
  auto actions = jointActions(left, right, alphabet);
  auto cone = [&](const Monitor& t) {
    auto lang = omegaLang(t, actions, alphabet);
    return coneContains(acceptSide ? lang.acceptMin : lang.rejectMin, cex.trace);
  };
  return cone(yesTerm) && !cone(noTerm);
}

}  // namespace monalg
