// SPDX-License-Identifier: Apache-2.0
//
// Randomized checks: axiom soundness under closed substitutions, and
// canonical-form equality against the semantic decision procedures.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "monalg/axioms.hpp"
#include "monalg/equivalence.hpp"
#include "monalg/normalize.hpp"
#include "monalg/random.hpp"

namespace monalg {

struct SoundnessFailure {
  std::size_t trial;
  Counterexample counterexample;  // carries the failing substitution
};

struct SoundnessReport {
  std::size_t trials = 0;
  std::vector<SoundnessFailure> failures;
};

// Trial i draws a closed substitution for the instance's variables from
// TermGen(trialSeed(seed, i)) over the alphabet's actions (depth <= 3) and
// compares both sides in `mode`. Requires a finite alphabet.
SoundnessReport soundnessFuzz(const AxiomInstance& inst, const Alphabet& alphabet, EquivMode mode,
                              std::size_t trials, std::uint64_t seed);

struct CrossCheckConfig {
  Alphabet alphabet = Alphabet::finite({"a", "b"});
  EquivMode mode = EquivMode::Verdict;
  bool open = false;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  GenConfig gen;
  bool shrink = true;
};

struct Disagreement {
  std::size_t trial;
  Monitor left;
  Monitor right;
  bool canonicalEqual;
  bool semanticEqual;
  std::optional<Counterexample> counterexample;
};

struct CrossCheckReport {
  std::size_t trials = 0;
  std::size_t equivalentPairs = 0;  // by the semantic side
  std::vector<Disagreement> disagreements;
};

// Canonical form used for a configuration: rnf or omega for closed pairs;
// open-rnf, fin-rnf, unary-rnf, unary-omega or open-omega for open pairs.
FormKind crossCheckForm(const Alphabet& alphabet, EquivMode mode, bool open);

// Semantic side: the closed decision procedure for closed pairs, the
// substitution oracle (bound depth sum + 2) for open pairs over a finite
// alphabet, and the fresh-action check for open pairs otherwise.
EquivResult semanticEquiv(const Monitor& m, const Monitor& n, const Alphabet& alphabet, EquivMode mode, bool open);

// Compares acEqual of canonical forms with the semantic side on random
// pairs. Disagreements are shrunk when `shrink` is set.
CrossCheckReport crossCheck(const CrossCheckConfig& config);

}  // namespace monalg
