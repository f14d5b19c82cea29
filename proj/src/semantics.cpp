// SPDX-License-Identifier: Apache-2.0
#include "monalg/semantics.hpp"

#include <algorithm>
#include <set>

namespace monalg {

namespace {

void collectSteps(const Monitor& m, const Label& label, std::vector<Monitor>& out) {
  switch (m.kind()) {
    case Kind::End:
    case Kind::Yes:
    case Kind::No: out.push_back(m); return;
    case Kind::Var: return;
    case Kind::Prefix:
      if (!label.isTau() && m.name() == label.action()) out.push_back(m.body());
      return;
    case Kind::Sum:
      collectSteps(m.left(), label, out);
      collectSteps(m.right(), label, out);
      return;
  }
}

void sortUnique(std::vector<Monitor>& v) {
  std::sort(v.begin(), v.end(), MonitorLess{});
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Tau-targets are verdicts, and verdicts only tau-step to themselves, so one
// round of tau-steps reaches the closure.
std::vector<Monitor> tauClose(const std::vector<Monitor>& states) {
  std::vector<Monitor> out = states;
  for (const auto& s : states) collectSteps(s, Label::tau(), out);
  sortUnique(out);
  return out;
}

void requireClosed(const Monitor& m) {
  if (!isClosed(m)) throw NonClosedInput("operation needs a closed monitor");
}

}  // namespace

std::vector<Monitor> strongSteps(const Monitor& m, const Label& label) {
  std::vector<Monitor> out;
  collectSteps(m, label, out);
  sortUnique(out);
  return out;
}

std::vector<Monitor> weakReach(const Monitor& m, const Trace& s) {
  std::vector<Monitor> states = tauClose({m});
  for (const auto& action : s) {
    std::vector<Monitor> next;
    Label label = Label::visible(action);
    for (const auto& st : states) collectSteps(st, label, next);
    sortUnique(next);
    states = tauClose(next);
    if (states.empty()) break;
  }
  return states;
}

bool accepts(const Monitor& m, const Trace& s) {
  requireClosed(m);
  auto states = weakReach(m, s);
  return std::find(states.begin(), states.end(), Monitor::yes()) != states.end();
}

bool rejects(const Monitor& m, const Trace& s) {
  requireClosed(m);
  auto states = weakReach(m, s);
  return std::find(states.begin(), states.end(), Monitor::no()) != states.end();
}

std::vector<std::string> probeActions(const Monitor& m, const Alphabet& alphabet) {
  if (alphabet.isFinite()) return alphabet.actions();
  auto present = actionsOf(m);
  std::vector<std::string> out(present.begin(), present.end());
  std::string fresh = "_probe";
  while (present.count(fresh)) fresh += "_";
  out.push_back(fresh);
  return out;
}

TraceLang langOf(const Monitor& m, const Alphabet& alphabet) {
  if (alphabet.isFinite()) {
    for (const auto& a : actionsOf(m))
      if (!alphabet.contains(a)) throw Error("action '" + a + "' is not in the alphabet");
  }
  return langOver(m, probeActions(m, alphabet));
}

TraceLang langOver(const Monitor& m, const std::vector<std::string>& actions) {
  requireClosed(m);
  TraceLang out;
  struct Entry {
    Trace trace;
    std::vector<Monitor> states;
    bool accepted;
    bool rejected;
  };
  auto has = [](const std::vector<Monitor>& states, const Monitor& v) {
    return std::find(states.begin(), states.end(), v) != states.end();
  };
  std::vector<Entry> frontier;
  {
    auto states = tauClose({m});
    frontier.push_back({{}, states, false, false});
  }
  while (!frontier.empty()) {
    std::vector<Entry> next;
    for (auto& e : frontier) {
      bool acc = has(e.states, Monitor::yes());
      bool rej = has(e.states, Monitor::no());
      if (acc && !e.accepted) out.acceptMin.push_back(e.trace);
      if (rej && !e.rejected) out.rejectMin.push_back(e.trace);
      acc = acc || e.accepted;
      rej = rej || e.rejected;
      if (acc && rej) continue;
      bool canMove = std::any_of(e.states.begin(), e.states.end(),
                                 [](const Monitor& s) { return !s.isVerdict() && s.kind() != Kind::Var; });
      if (!canMove) continue;
      for (const auto& a : actions) {
        std::vector<Monitor> succ;
        Label label = Label::visible(a);
        for (const auto& st : e.states) {
          if (st.isVerdict()) continue;  // self-loops add nothing new
          collectSteps(st, label, succ);
        }
        sortUnique(succ);
        succ = tauClose(succ);
        Trace t = e.trace;
        t.push_back(a);
        next.push_back({std::move(t), std::move(succ), acc, rej});
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.acceptMin.begin(), out.acceptMin.end());
  std::sort(out.rejectMin.begin(), out.rejectMin.end());
  return out;
}

bool isPrefix(const Trace& p, const Trace& t) {
  return p.size() <= t.size() && std::equal(p.begin(), p.end(), t.begin());
}

bool coneContains(const std::vector<Trace>& antichain, const Trace& t) {
  return std::any_of(antichain.begin(), antichain.end(), [&](const Trace& p) { return isPrefix(p, t); });
}

std::vector<Trace> omegaCanon(std::vector<Trace> antichain, const Alphabet& alphabet) {
  std::set<Trace> set(antichain.begin(), antichain.end());
  if (!alphabet.isFinite()) return {set.begin(), set.end()};
  const auto& actions = alphabet.actions();
  bool changed = true;
  while (changed) {
    changed = false;
    std::set<Trace> parents;
    for (const auto& t : set)
      if (!t.empty()) parents.insert(Trace(t.begin(), t.end() - 1));
    for (const auto& p : parents) {
      bool full = std::all_of(actions.begin(), actions.end(), [&](const std::string& a) {
        Trace child = p;
        child.push_back(a);
        return set.count(child) > 0;
      });
      if (!full) continue;
      for (const auto& a : actions) {
        Trace child = p;
        child.push_back(a);
        set.erase(child);
      }
      set.insert(p);
      changed = true;
    }
  }
  return {set.begin(), set.end()};
}

}  // namespace monalg
