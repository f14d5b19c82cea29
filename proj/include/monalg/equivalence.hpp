// SPDX-License-Identifier: Apache-2.0
//
// Verdict and omega-verdict equivalence: closed terms through their trace
// antichains, open terms through canonical forms, and a brute-force
// substitution oracle used to cross-check the canonical forms.
#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "monalg/semantics.hpp"
#include "monalg/term.hpp"

namespace monalg {

enum class EquivMode { Verdict, OmegaVerdict };

std::string_view toString(EquivMode mode);

enum class Side { AcceptedOnlyByLeft, AcceptedOnlyByRight, RejectedOnlyByLeft, RejectedOnlyByRight };

std::string_view toString(Side side);

struct Counterexample {
  Substitution substitution;  // empty for closed inputs
  Trace trace;
  Side side;
};

struct EquivResult {
  bool equivalent = true;
  std::optional<Counterexample> counterexample;
};

// Throws NonClosedInput if either side has variables.
EquivResult verdictEquivClosed(const Monitor& m, const Monitor& n, const Alphabet& alphabet = Alphabet::openEnded());
// With an open-ended alphabet this is verdictEquivClosed.
EquivResult omegaEquivClosed(const Monitor& m, const Monitor& n, const Alphabet& alphabet);
EquivResult equivClosed(const Monitor& m, const Monitor& n, const Alphabet& alphabet, EquivMode mode);

// {end, yes, no} together with t.yes, t.no and t.(yes + no) for every trace
// t of length at most d, without duplicates.
std::vector<Monitor> valueSet(const Alphabet& alphabet, std::size_t d);

struct OracleOptions {
  std::size_t cap = 4096;      // largest family tried before sampling
  std::uint64_t seed = 0x5eed;  // sampling seed
  bool minimize = false;       // search every map for the shortest counterexample
};

// Full product of valueSet over `vars` when it fits in the cap; otherwise
// every map with a single non-end variable followed by seeded random maps up
// to the cap. The empty variable set yields the identity alone.
std::vector<Substitution> substitutionFamily(const std::set<std::string>& vars, const Alphabet& alphabet,
                                             std::size_t d, const OracleOptions& options = {});

// Closed check under every substitution of the family. Without `minimize`
// the first failing map (in family order) is reported.
EquivResult oracleEquivOpen(const Monitor& m, const Monitor& n, const Alphabet& alphabet, EquivMode mode,
                            std::size_t d, const OracleOptions& options = {});

std::size_t defaultBound(const Monitor& m, const Monitor& n);

// Canonical-form decision procedures.
bool verdictEquivOpen(const Monitor& m, const Monitor& n, const Alphabet& alphabet);
bool omegaEquivOpen(const Monitor& m, const Monitor& n, const Alphabet& alphabet);
bool equivOpen(const Monitor& m, const Monitor& n, const Alphabet& alphabet, EquivMode mode);

// Substitution used for open terms over an open-ended alphabet: each
// variable x goes to _fx_x.(yes + no), with the action name lengthened until
// it occurs in neither term.
Substitution freshActionSubstitution(const Monitor& m, const Monitor& n);

// True when the counterexample reproduces a disagreement between m and n.
bool replayCounterexample(const Monitor& m, const Monitor& n, const Counterexample& cex, const Alphabet& alphabet,
                          EquivMode mode);

}  // namespace monalg
