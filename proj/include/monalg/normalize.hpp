// SPDX-License-Identifier: Apache-2.0
//
// Canonical forms, each optionally with a derivation of input = output in
// the axiom system that belongs to the form.
//
// Every pipeline works on the "atoms" of a term: the summands left after
// distributing prefixes over sums (D_a) and dropping end (E_a, A4). Each
// atom is a prefix chain ending in yes, no or a variable. The reductions
// remove or add atoms, and the result is rebuilt as a trie.
#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "monalg/axioms.hpp"
#include "monalg/prooflog.hpp"
#include "monalg/term.hpp"

namespace monalg {

enum class FormKind { NF, RNF, OmegaNF, OpenNF, OpenRNF, FinRNF, UnaryRNF, UnaryOmegaNF, OpenOmegaNF };

std::string_view formName(FormKind kind);  // "nf", "rnf", "omega", "open-nf", ...
std::optional<FormKind> parseFormName(std::string_view name);
const std::vector<FormKind>& allForms();
SystemName formSystem(FormKind kind);

enum class NormalizeErrorKind { AlphabetTooSmall, AlphabetNotUnary, InfiniteAlphabet, UnknownAction, DerivationUnavailable };

class NormalizeError : public Error {
 public:
  NormalizeError(NormalizeErrorKind kind, const std::string& message) : Error(message), kind_(kind) {}
  NormalizeErrorKind kind() const { return kind_; }

 private:
  NormalizeErrorKind kind_;
};

struct CanonicalForm {
  Monitor term;
  std::optional<Derivation> derivation;
  FormKind kind;
};

// Throws NonClosedInput for the closed forms on open input, and
// NormalizeError when the alphabet does not suit the form. With emitProof,
// NormalizeError(DerivationUnavailable) is raised when a variable occurrence
// is redundant only through several shorter occurrences together, which no
// single O2 instance removes.
CanonicalForm normalize(FormKind kind, const Monitor& m, const Alphabet& alphabet, bool emitProof = false);

// Derivation of eq in the form's system, through the canonical forms of both
// sides and AC steps between them; nullopt when the canonical forms are not
// AC-equal. Throws as normalize does.
std::optional<Derivation> proveEquation(FormKind kind, const Equation& eq, const Alphabet& alphabet);

inline CanonicalForm normalFormClosed(const Monitor& m, bool emitProof = false) {
  return normalize(FormKind::NF, m, Alphabet::openEnded(), emitProof);
}
inline CanonicalForm reducedNFClosed(const Monitor& m, bool emitProof = false) {
  return normalize(FormKind::RNF, m, Alphabet::openEnded(), emitProof);
}
inline CanonicalForm omegaNFClosed(const Monitor& m, const Alphabet& alphabet, bool emitProof = false) {
  return normalize(FormKind::OmegaNF, m, alphabet, emitProof);
}
inline CanonicalForm openNF(const Monitor& m, bool emitProof = false) {
  return normalize(FormKind::OpenNF, m, Alphabet::openEnded(), emitProof);
}
inline CanonicalForm openRNF(const Monitor& m, bool emitProof = false) {
  return normalize(FormKind::OpenRNF, m, Alphabet::openEnded(), emitProof);
}
inline CanonicalForm finiteActRNF(const Monitor& m, const Alphabet& alphabet, bool emitProof = false) {
  return normalize(FormKind::FinRNF, m, alphabet, emitProof);
}
inline CanonicalForm unaryRNF(const Monitor& m, const Alphabet& alphabet, bool emitProof = false) {
  return normalize(FormKind::UnaryRNF, m, alphabet, emitProof);
}
inline CanonicalForm unaryOmegaNF(const Monitor& m, const Alphabet& alphabet, bool emitProof = false) {
  return normalize(FormKind::UnaryOmegaNF, m, alphabet, emitProof);
}
inline CanonicalForm omegaOpenNF(const Monitor& m, const Alphabet& alphabet, bool emitProof = false) {
  return normalize(FormKind::OpenOmegaNF, m, alphabet, emitProof);
}

// Least k such that every trace accepted and rejected by barK(s, k, yes+no)
// is accepted and rejected by m with all variables mapped to end. The search
// stops at k_b + 1, where k_b is the least k with |s^k| > depth(m).
std::optional<unsigned> coveringK(const Monitor& m, const Trace& s, const Alphabet& alphabet);

// Traces that lead from the root of m to a leaf of the given kind, following
// prefixes through sums.
std::vector<Trace> leafTraces(const Monitor& m, Kind leaf);

}  // namespace monalg
