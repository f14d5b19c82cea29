// SPDX-License-Identifier: Apache-2.0
//
// Axiom schemas, the trace notation used by the O2 family, and the named
// axiom systems built from them.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monalg/term.hpp"

namespace monalg {

enum class Schema {
  A1, A2, A3, A4, E_a, Y_a, N_a, D_a, Y, N, Y_omega, N_omega, O1, O2, V1, V1_omega
};

std::string_view schemaName(Schema s);
std::optional<Schema> parseSchemaName(std::string_view name);
const std::vector<Schema>& allSchemas();

enum class SystemName { Ev, Eomega, EvPrime, EvfPrime, Ev1Prime, Eomega1Prime, EomegafPrime };

std::string_view systemName(SystemName s);  // "Ev", "Eomega", "Ev'", ...
std::optional<SystemName> parseSystemName(std::string_view name);
const std::vector<SystemName>& allSystems();

// Parameters of a schema instance. Which fields are required depends on the
// schema: E_a/Y_a/N_a/D_a take an action; O2 takes a trace and k; V1 and
// V1_omega take an action unless the alphabet is a singleton.
struct Bindings {
  std::optional<std::string> action;
  std::optional<Trace> trace;
  std::optional<unsigned> k;
  friend bool operator==(const Bindings&, const Bindings&) = default;
};

struct AxiomInstance {
  Schema schema;
  Bindings bindings;
  Equation equation;
};

enum class AxiomErrorKind { ArityMismatch, InfiniteAlphabetForFiniteSchema, MissingBounds, BadParameter };

class AxiomError : public Error {
 public:
  AxiomError(AxiomErrorKind kind, const std::string& message) : Error(message), kind_(kind) {}
  AxiomErrorKind kind() const { return kind_; }

 private:
  AxiomErrorKind kind_;
};

// Every prefix of s, shortest first, including the empty trace and s.
std::vector<Trace> preSet(const Trace& s);

// Traces of length at most |s| that are not prefixes of s, ordered by length
// and then lexicographically.
std::vector<Trace> barLeqTraces(const Trace& s, const Alphabet& alphabet);

Monitor barLeq(const Trace& s, const Monitor& m, const Alphabet& alphabet);
Monitor bar(const Trace& s, const Monitor& m, const Alphabet& alphabet);
// k >= 1 and s nonempty; throws AxiomError(BadParameter) otherwise.
Monitor barK(const Trace& s, unsigned k, const Monitor& m, const Alphabet& alphabet);

// Sum of a.m over the alphabet, left-associated in action order.
Monitor fan(const Monitor& m, const Alphabet& alphabet);

bool needsFiniteAlphabet(Schema s);

// The schema variables used by instance equations.
inline constexpr std::string_view kSchemaVars[] = {"x", "y", "z"};

AxiomInstance instantiate(Schema schema, const Bindings& bindings, const Alphabet& alphabet);

bool systemContains(SystemName system, Schema schema, const Alphabet& alphabet);

struct SchemaBounds {
  std::size_t maxTraceLen = 0;
  unsigned maxK = 0;
};

// Throws AxiomError(MissingBounds) when the system has the O2 family and no
// bounds are supplied.
std::vector<AxiomInstance> listSystem(SystemName system, const Alphabet& alphabet,
                                      const std::optional<SchemaBounds>& bounds = std::nullopt);

// x + a^n.x + barK(a^n, 3, yes+no) = x + barK(a^n, 3, yes+no), where a is the
// first action of the alphabet.
Equation witnessFamily(unsigned n, const Alphabet& alphabet);

}  // namespace monalg
