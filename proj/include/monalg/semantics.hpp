// SPDX-License-Identifier: Apache-2.0
//
// Operational semantics: strong and weak transitions, acceptance and
// rejection of finite traces, and the antichain view of L_a / L_r.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monalg/term.hpp"

namespace monalg {

// A visible action or the internal label tau, which no alphabet contains.
class Label {
 public:
  static Label tau() { return Label(std::nullopt); }
  static Label visible(std::string action) { return Label(std::move(action)); }

  bool isTau() const { return !action_.has_value(); }
  const std::string& action() const { return *action_; }

 private:
  explicit Label(std::optional<std::string> action) : action_(std::move(action)) {}
  std::optional<std::string> action_;
};

// Targets of single transitions, deduplicated, in canonical order.
std::vector<Monitor> strongSteps(const Monitor& m, const Label& label);

// {m' : m =s=> m'}: tau-closure, then for each action one visible step
// followed by tau-closure.
std::vector<Monitor> weakReach(const Monitor& m, const Trace& s);

// Both require a closed monitor and throw NonClosedInput otherwise.
bool accepts(const Monitor& m, const Trace& s);
bool rejects(const Monitor& m, const Trace& s);

// Minimal accepted and minimal rejected traces. Each list is prefix-free
// and sorted lexicographically.
struct TraceLang {
  std::vector<Trace> acceptMin;
  std::vector<Trace> rejectMin;
  friend bool operator==(const TraceLang& a, const TraceLang& b) {
    return a.acceptMin == b.acceptMin && a.rejectMin == b.rejectMin;
  }
};

// Actions enumerated when exploring m: the alphabet itself when finite,
// otherwise the actions of m plus one action that does not occur in m.
std::vector<std::string> probeActions(const Monitor& m, const Alphabet& alphabet);

// Explores traces over the given actions up to depth(m). Throws
// NonClosedInput for open terms and Error when m uses an action that a
// finite alphabet lacks.
TraceLang langOf(const Monitor& m, const Alphabet& alphabet);
TraceLang langOver(const Monitor& m, const std::vector<std::string>& actions);

// Smallest antichain with the same cone of infinite extensions: repeatedly
// replaces a full fan {t.a : a in alphabet} by t.
std::vector<Trace> omegaCanon(std::vector<Trace> antichain, const Alphabet& alphabet);

// True when some member of the antichain is a prefix of t.
bool coneContains(const std::vector<Trace>& antichain, const Trace& t);
bool isPrefix(const Trace& p, const Trace& t);

}  // namespace monalg
