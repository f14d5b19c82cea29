// SPDX-License-Identifier: Apache-2.0
//
// Equational derivations and their checker. The checker is purely
// syntactic: every step must match its justification up to structural
// equality, so AC rearrangements appear as explicit A1-A4 steps.
//
// File format, one record per line ('#' starts a comment):
//
//   system: Evf'
//   alphabet: a,b
//   bounds: s=3 k=3                      (optional)
//   vars: x, y                           (optional; needed for infinite alphabets)
//   step <id>: <lhs> = <rhs> by <rule>
//
// Rules: Reflexivity | Symmetry(i) | Transitivity(i, j) |
//        CongruenceSum(i, j) | CongruencePrefix(a, i) |
//        Substitutivity(i; x -> t, ...) |
//        Axiom(Name[; a=act][; s=a.b][; k=3][; x -> t, ...])
#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "monalg/axioms.hpp"
#include "monalg/term.hpp"

namespace monalg {

enum class Rule { Axiom, Reflexivity, Symmetry, Transitivity, CongruenceSum, CongruencePrefix, Substitutivity };

struct Justification {
  Rule rule = Rule::Reflexivity;
  Schema schema = Schema::A1;  // Axiom only
  Bindings bindings;           // Axiom only
  Substitution sigma;          // Axiom and Substitutivity
  std::size_t first = 0;       // referenced step ids
  std::size_t second = 0;
  std::string action;          // CongruencePrefix only
};

struct Step {
  std::size_t id = 0;
  Equation equation;
  Justification justification;
};

struct Derivation {
  SystemName system = SystemName::Ev;
  Alphabet alphabet = Alphabet::openEnded();
  std::optional<SchemaBounds> bounds;
  std::vector<Step> steps;

  const Equation& conclusion() const { return steps.back().equation; }
};

enum class CheckErrorKind { NotAnInstance, ShapeMismatch, DanglingReference, AxiomNotInSystem, ConclusionMismatch };

std::string_view toString(CheckErrorKind kind);

struct CheckError {
  std::size_t stepId = 0;
  CheckErrorKind kind = CheckErrorKind::ShapeMismatch;
  std::string message;
};

// Checks one step against the equations of already validated earlier steps.
std::optional<CheckError> checkStep(const Derivation& context, const std::map<std::size_t, Equation>& prior,
                                    const Step& step);

// Checks every step in order and compares the last equation with `claimed`.
std::optional<CheckError> checkDerivation(const Derivation& d, const std::optional<Equation>& claimed = std::nullopt);

std::string writeDerivation(const Derivation& d);
// Throws ParseError on malformed input.
Derivation readDerivation(std::string_view text);

}  // namespace monalg
