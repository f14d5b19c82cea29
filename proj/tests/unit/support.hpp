// SPDX-License-Identifier: Apache-2.0
//
// Test-side oracles that do not go through the library's semantics: verdicts
// are computed by structural recursion on the term, and languages by
// enumerating every trace up to the relevant length.
#pragma once

#include <algorithm>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "monalg/random.hpp"
#include "monalg/syntax.hpp"
#include "monalg/term.hpp"

namespace monalg {
// Lets doctest print terms in failure messages.
inline std::ostream& operator<<(std::ostream& os, const Monitor& m) { return os << printMonitor(m); }
}  // namespace monalg

namespace monalg::testing {

// Verdict v in {Yes, No} reachable along t, by recursion on the term:
// a verdict keeps itself on every trace, a prefix consumes its action, a sum
// is the union of its summands, end and variables reach nothing.
inline bool reaches(const Monitor& m, const Trace& t, std::size_t from, Kind v) {
  switch (m.kind()) {
    case Kind::Yes:
    case Kind::No: return m.kind() == v;
    case Kind::End:
    case Kind::Var: return false;
    case Kind::Prefix: return from < t.size() && t[from] == m.name() && reaches(m.body(), t, from + 1, v);
    case Kind::Sum: return reaches(m.left(), t, from, v) || reaches(m.right(), t, from, v);
  }
  return false;
}

inline bool directAccepts(const Monitor& m, const Trace& t) { return reaches(m, t, 0, Kind::Yes); }
inline bool directRejects(const Monitor& m, const Trace& t) { return reaches(m, t, 0, Kind::No); }

inline std::vector<Trace> allTraces(const std::vector<std::string>& actions, std::size_t maxLen) {
  std::vector<Trace> out{Trace{}};
  std::vector<Trace> layer{Trace{}};
  for (std::size_t len = 1; len <= maxLen; ++len) {
    std::vector<Trace> next;
    for (const auto& t : layer)
      for (const auto& a : actions) {
        Trace u = t;
        u.push_back(a);
        next.push_back(u);
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

inline std::vector<Trace> tracesOfLength(const std::vector<std::string>& actions, std::size_t len) {
  std::vector<Trace> out;
  for (auto& t : allTraces(actions, len))
    if (t.size() == len) out.push_back(t);
  return out;
}

// Closed verdict equivalence by enumeration: behaviour on traces longer than
// the larger depth is fixed by the prefix of that length.
inline bool bruteVerdictEquiv(const Monitor& m, const Monitor& n, const std::vector<std::string>& actions) {
  const std::size_t len = std::max(m.depth(), n.depth());
  for (const auto& t : allTraces(actions, len))
    if (directAccepts(m, t) != directAccepts(n, t) || directRejects(m, t) != directRejects(n, t)) return false;
  return true;
}

// Closed omega-verdict equivalence: an infinite word is in a cone iff its
// prefix of length max-depth is, so comparing those prefixes suffices.
inline bool bruteOmegaEquiv(const Monitor& m, const Monitor& n, const std::vector<std::string>& actions) {
  const std::size_t len = std::max(m.depth(), n.depth());
  for (const auto& t : tracesOfLength(actions, len))
    if (directAccepts(m, t) != directAccepts(n, t) || directRejects(m, t) != directRejects(n, t)) return false;
  return true;
}

inline Monitor parse(const std::string& text, const std::vector<std::string>& actions = {"a", "b"}) {
  return parseMonitor(text, Alphabet::finite(actions));
}

inline Monitor parseOpen(const std::string& text, std::set<std::string> vars = {"x", "y", "z"}) {
  return parseMonitor(text, TermContext{Alphabet::openEnded(), std::move(vars)});
}

inline GenConfig closedConfig(std::size_t depth, std::vector<std::string> actions = {"a", "b"}) {
  GenConfig c;
  c.maxDepth = depth;
  c.actions = std::move(actions);
  c.vars.clear();
  return c;
}

inline GenConfig openConfig(std::size_t depth, std::vector<std::string> actions = {"a", "b"}) {
  GenConfig c;
  c.maxDepth = depth;
  c.actions = std::move(actions);
  return c;
}

}  // namespace monalg::testing
