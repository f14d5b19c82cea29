// SPDX-License-Identifier: Apache-2.0
#include "monalg/axioms.hpp"

#include <algorithm>
#include <array>

namespace monalg {

namespace {

struct SchemaInfo {
  Schema schema;
  std::string_view name;
};

constexpr std::array<SchemaInfo, 16> kSchemas{{
    {Schema::A1, "A1"}, {Schema::A2, "A2"}, {Schema::A3, "A3"}, {Schema::A4, "A4"},
    {Schema::E_a, "E_a"}, {Schema::Y_a, "Y_a"}, {Schema::N_a, "N_a"}, {Schema::D_a, "D_a"},
    {Schema::Y, "Y"}, {Schema::N, "N"}, {Schema::Y_omega, "Y_omega"}, {Schema::N_omega, "N_omega"},
    {Schema::O1, "O1"}, {Schema::O2, "O2"}, {Schema::V1, "V1"}, {Schema::V1_omega, "V1_omega"},
}};

struct SystemInfo {
  SystemName system;
  std::string_view name;
};

constexpr std::array<SystemInfo, 7> kSystems{{
    {SystemName::Ev, "Ev"}, {SystemName::Eomega, "Eomega"}, {SystemName::EvPrime, "Ev'"},
    {SystemName::EvfPrime, "Evf'"}, {SystemName::Ev1Prime, "Ev1'"},
    {SystemName::Eomega1Prime, "Eomega1'"}, {SystemName::EomegafPrime, "Eomegaf'"},
}};

Monitor X() { return Monitor::var("x"); }
Monitor Yv() { return Monitor::var("y"); }
Monitor Z() { return Monitor::var("z"); }
Monitor yesNo() { return Monitor::sum(Monitor::yes(), Monitor::no()); }

bool takesAction(Schema s) {
  return s == Schema::E_a || s == Schema::Y_a || s == Schema::N_a || s == Schema::D_a;
}

Trace repeat(const Trace& s, std::size_t times) {
  Trace out;
  for (std::size_t i = 0; i < times; ++i) out.insert(out.end(), s.begin(), s.end());
  return out;
}

// Sum of the non-end parts, left-associated; end when none remain.
Monitor sumNonEnd(const std::vector<Monitor>& parts) {
  std::vector<Monitor> kept;
  for (const auto& p : parts)
    if (p.kind() != Kind::End) kept.push_back(p);
  return sumOf(kept);
}

void requireFinite(const Alphabet& alphabet, std::string_view what) {
  if (!alphabet.isFinite())
    throw AxiomError(AxiomErrorKind::InfiniteAlphabetForFiniteSchema,
                     std::string(what) + " needs a finite alphabet");
}

}  // namespace

std::string_view schemaName(Schema s) {
  for (const auto& info : kSchemas)
    if (info.schema == s) return info.name;
  return "?";
}

std::optional<Schema> parseSchemaName(std::string_view name) {
  for (const auto& info : kSchemas)
    if (info.name == name) return info.schema;
  return std::nullopt;
}

const std::vector<Schema>& allSchemas() {
  static const std::vector<Schema> all = [] {
    std::vector<Schema> v;
    for (const auto& info : kSchemas) v.push_back(info.schema);
    return v;
  }();
  return all;
}

std::string_view systemName(SystemName s) {
  for (const auto& info : kSystems)
    if (info.system == s) return info.name;
  return "?";
}

std::optional<SystemName> parseSystemName(std::string_view name) {
  for (const auto& info : kSystems)
    if (info.name == name) return info.system;
  return std::nullopt;
}

const std::vector<SystemName>& allSystems() {
  static const std::vector<SystemName> all = [] {
    std::vector<SystemName> v;
    for (const auto& info : kSystems) v.push_back(info.system);
    return v;
  }();
  return all;
}

std::vector<Trace> preSet(const Trace& s) {
  std::vector<Trace> out;
  for (std::size_t i = 0; i <= s.size(); ++i) out.emplace_back(s.begin(), s.begin() + static_cast<long>(i));
  return out;
}

std::vector<Trace> barLeqTraces(const Trace& s, const Alphabet& alphabet) {
  requireFinite(alphabet, "the bar construction");
  std::vector<Trace> out;
  std::vector<Trace> layer{Trace{}};
  for (std::size_t len = 1; len <= s.size(); ++len) {
    std::vector<Trace> next;
    for (const auto& t : layer)
      for (const auto& a : alphabet.actions()) {
        Trace u = t;
        u.push_back(a);
        next.push_back(std::move(u));
      }
    for (const auto& t : next)
      if (!std::equal(t.begin(), t.end(), s.begin())) out.push_back(t);
    layer = std::move(next);
  }
  return out;
}

Monitor barLeq(const Trace& s, const Monitor& m, const Alphabet& alphabet) {
  std::vector<Monitor> parts;
  for (const auto& t : barLeqTraces(s, alphabet)) parts.push_back(prefixSeq(t, m));
  return sumOf(parts);
}

Monitor fan(const Monitor& m, const Alphabet& alphabet) {
  requireFinite(alphabet, "a full-alphabet sum");
  std::vector<Monitor> parts;
  for (const auto& a : alphabet.actions()) parts.push_back(Monitor::prefix(a, m));
  return sumOf(parts);
}

Monitor bar(const Trace& s, const Monitor& m, const Alphabet& alphabet) {
  return sumNonEnd({barLeq(s, m, alphabet), prefixSeq(s, fan(m, alphabet))});
}

Monitor barK(const Trace& s, unsigned k, const Monitor& m, const Alphabet& alphabet) {
  if (s.empty()) throw AxiomError(AxiomErrorKind::BadParameter, "barK needs a nonempty trace");
  if (k == 0) throw AxiomError(AxiomErrorKind::BadParameter, "barK needs k >= 1");
  if (k == 1) return bar(s, m, alphabet);
  Monitor below = barLeq(s, m, alphabet);
  std::vector<Monitor> parts;
  for (unsigned i = 1; i + 1 < k; ++i)
    if (below.kind() != Kind::End) parts.push_back(prefixSeq(repeat(s, i), below));
  parts.push_back(prefixSeq(repeat(s, k - 1), bar(s, m, alphabet)));
  return sumOf(parts);
}

bool needsFiniteAlphabet(Schema s) {
  return s == Schema::Y || s == Schema::N || s == Schema::Y_omega || s == Schema::N_omega ||
         s == Schema::O2;
}

AxiomInstance instantiate(Schema schema, const Bindings& b, const Alphabet& alphabet) {
  auto arity = [&](const std::string& msg) {
    throw AxiomError(AxiomErrorKind::ArityMismatch, std::string(schemaName(schema)) + ": " + msg);
  };
  if (needsFiniteAlphabet(schema)) requireFinite(alphabet, schemaName(schema));

  bool wantsAction = takesAction(schema) || schema == Schema::V1 || schema == Schema::V1_omega;
  bool wantsTraceK = schema == Schema::O2;
  if (!wantsAction && b.action) arity("takes no action parameter");
  if (!wantsTraceK && (b.trace || b.k)) arity("takes no trace or repetition parameter");

  Bindings bound = b;
  std::string action;
  if (wantsAction) {
    if (!b.action) {
      if (takesAction(schema) || !alphabet.isFinite() || alphabet.size() != 1)
        arity("needs an action parameter");
      bound.action = alphabet.actions().front();
    }
    action = *bound.action;
    if (!alphabet.contains(action))
      throw AxiomError(AxiomErrorKind::BadParameter, "action '" + action + "' is not in the alphabet");
  }

  Equation eq;
  const Monitor yes = Monitor::yes();
  const Monitor no = Monitor::no();
  switch (schema) {
    case Schema::A1: eq = {Monitor::sum(X(), Yv()), Monitor::sum(Yv(), X())}; break;
    case Schema::A2:
      eq = {Monitor::sum(X(), Monitor::sum(Yv(), Z())), Monitor::sum(Monitor::sum(X(), Yv()), Z())};
      break;
    case Schema::A3: eq = {Monitor::sum(X(), X()), X()}; break;
    case Schema::A4: eq = {Monitor::sum(X(), Monitor::end()), X()}; break;
    case Schema::E_a: eq = {Monitor::prefix(action, Monitor::end()), Monitor::end()}; break;
    case Schema::Y_a: eq = {yes, Monitor::sum(yes, Monitor::prefix(action, yes))}; break;
    case Schema::N_a: eq = {no, Monitor::sum(no, Monitor::prefix(action, no))}; break;
    case Schema::D_a:
      eq = {Monitor::prefix(action, Monitor::sum(X(), Yv())),
            Monitor::sum(Monitor::prefix(action, X()), Monitor::prefix(action, Yv()))};
      break;
    case Schema::Y: eq = {yes, Monitor::sum(yes, fan(yes, alphabet))}; break;
    case Schema::N: eq = {no, Monitor::sum(no, fan(no, alphabet))}; break;
    case Schema::Y_omega: eq = {yes, fan(yes, alphabet)}; break;
    case Schema::N_omega: eq = {no, fan(no, alphabet)}; break;
    case Schema::O1: eq = {yesNo(), Monitor::sum(yesNo(), X())}; break;
    case Schema::O2: {
      if (!b.trace || !b.k) arity("needs a trace s and a repetition k");
      if (b.trace->empty()) throw AxiomError(AxiomErrorKind::BadParameter, "O2 needs a nonempty trace");
      if (*b.k == 0) throw AxiomError(AxiomErrorKind::BadParameter, "O2 needs k >= 1");
      for (const auto& a : *b.trace)
        if (!alphabet.contains(a))
          throw AxiomError(AxiomErrorKind::BadParameter, "action '" + a + "' is not in the alphabet");
      Monitor cover = barK(*b.trace, *b.k, yesNo(), alphabet);
      eq = {Monitor::sum(Monitor::sum(X(), prefixSeq(*b.trace, X())), cover), Monitor::sum(X(), cover)};
      break;
    }
    case Schema::V1: eq = {X(), Monitor::sum(X(), Monitor::prefix(action, X()))}; break;
    case Schema::V1_omega: eq = {X(), Monitor::prefix(action, X())}; break;
  }
  return {schema, bound, eq};
}

bool systemContains(SystemName system, Schema schema, const Alphabet& alphabet) {
  auto base = [&](Schema s) {
    switch (s) {
      case Schema::A1:
      case Schema::A2:
      case Schema::A3:
      case Schema::A4:
      case Schema::E_a:
      case Schema::Y_a:
      case Schema::N_a:
      case Schema::D_a: return true;
      case Schema::Y:
      case Schema::N: return alphabet.isFinite();
      default: return false;
    }
  };
  bool ac = schema == Schema::A1 || schema == Schema::A2 || schema == Schema::A3 || schema == Schema::A4;
  bool omega = schema == Schema::Y_omega || schema == Schema::N_omega;
  switch (system) {
    case SystemName::Ev: return base(schema);
    case SystemName::Eomega: return base(schema) || omega;
    case SystemName::EvPrime: return base(schema) || schema == Schema::O1;
    case SystemName::EvfPrime: return base(schema) || schema == Schema::O1 || schema == Schema::O2;
    case SystemName::Ev1Prime: return base(schema) || schema == Schema::O1 || schema == Schema::V1;
    case SystemName::Eomega1Prime: return ac || schema == Schema::V1_omega || schema == Schema::O1;
    case SystemName::EomegafPrime:
      return base(schema) || omega || schema == Schema::O1 || schema == Schema::O2;
  }
  return false;
}

std::vector<AxiomInstance> listSystem(SystemName system, const Alphabet& alphabet,
                                      const std::optional<SchemaBounds>& bounds) {
  std::vector<AxiomInstance> out;
  bool hasO2 = systemContains(system, Schema::O2, alphabet);
  if (hasO2 && !bounds)
    throw AxiomError(AxiomErrorKind::MissingBounds,
                     std::string(systemName(system)) + " contains the O2 family; give --max-s and --max-k");
  for (Schema s : allSchemas()) {
    if (s == Schema::Y || s == Schema::N) continue;  // derivable from Y_a / N_a
    if (!systemContains(system, s, alphabet)) continue;
    if (takesAction(s) || s == Schema::V1 || s == Schema::V1_omega) {
      if (!alphabet.isFinite())
        throw AxiomError(AxiomErrorKind::InfiniteAlphabetForFiniteSchema,
                         "per-action instances cannot be enumerated over an open-ended alphabet");
      for (const auto& a : alphabet.actions()) out.push_back(instantiate(s, Bindings{a, {}, {}}, alphabet));
    } else if (s == Schema::O2) {
      if (alphabet.isFinite() && bounds->maxTraceLen > 0) {
        std::vector<Trace> layer{Trace{}};
        for (std::size_t len = 1; len <= bounds->maxTraceLen; ++len) {
          std::vector<Trace> next;
          for (const auto& t : layer)
            for (const auto& a : alphabet.actions()) {
              Trace u = t;
              u.push_back(a);
              next.push_back(u);
            }
          for (const auto& t : next)
            for (unsigned k = 1; k <= bounds->maxK; ++k)
              out.push_back(instantiate(s, Bindings{{}, t, k}, alphabet));
          layer = std::move(next);
        }
      }
    } else {
      out.push_back(instantiate(s, Bindings{}, alphabet));
    }
  }
  return out;
}

Equation witnessFamily(unsigned n, const Alphabet& alphabet) {
  requireFinite(alphabet, "the witness family");
  if (alphabet.size() < 2) throw AxiomError(AxiomErrorKind::BadParameter, "the witness family needs two actions");
  if (n == 0) throw AxiomError(AxiomErrorKind::BadParameter, "the witness family needs n >= 1");
  std::string a = alphabet.contains("a") ? "a" : alphabet.actions().front();
  return instantiate(Schema::O2, Bindings{{}, Trace(n, a), 3u}, alphabet).equation;
}

}  // namespace monalg
