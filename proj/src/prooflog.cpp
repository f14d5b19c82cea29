// SPDX-License-Identifier: Apache-2.0
#include "monalg/prooflog.hpp"

#include <algorithm>
#include <cctype>

#include "monalg/syntax.hpp"

namespace monalg {

std::string_view toString(CheckErrorKind kind) {
  switch (kind) {
    case CheckErrorKind::NotAnInstance: return "NotAnInstance";
    case CheckErrorKind::ShapeMismatch: return "ShapeMismatch";
    case CheckErrorKind::DanglingReference: return "DanglingReference";
    case CheckErrorKind::AxiomNotInSystem: return "AxiomNotInSystem";
    case CheckErrorKind::ConclusionMismatch: return "ConclusionMismatch";
  }
  return "?";
}

namespace {

CheckError fail(const Step& step, CheckErrorKind kind, const std::string& message) {
  return CheckError{step.id, kind, message};
}

std::string joinTrace(const Trace& t) {
  std::string out;
  for (const auto& a : t) {
    if (!out.empty()) out += '.';
    out += a;
  }
  return out;
}

}  // namespace

std::optional<CheckError> checkStep(const Derivation& context, const std::map<std::size_t, Equation>& prior,
                                    const Step& step) {
  const Justification& j = step.justification;
  auto ref = [&](std::size_t id) -> const Equation* {
    if (id >= step.id) return nullptr;
    auto it = prior.find(id);
    return it == prior.end() ? nullptr : &it->second;
  };
  auto dangling = [&](std::size_t id) {
    return fail(step, CheckErrorKind::DanglingReference,
                "step " + std::to_string(id) + " does not precede step " + std::to_string(step.id));
  };
  auto expectEq = [&](const Equation& want, const std::string& rule) -> std::optional<CheckError> {
    if (step.equation == want) return std::nullopt;
    return fail(step, CheckErrorKind::ShapeMismatch,
                rule + " yields " + printEquation(want) + ", not " + printEquation(step.equation));
  };

  switch (j.rule) {
    case Rule::Reflexivity:
      if (step.equation.lhs == step.equation.rhs) return std::nullopt;
      return fail(step, CheckErrorKind::ShapeMismatch, "reflexivity needs identical sides");
    case Rule::Symmetry: {
      const Equation* p = ref(j.first);
      if (!p) return dangling(j.first);
      return expectEq({p->rhs, p->lhs}, "symmetry");
    }
    case Rule::Transitivity: {
      const Equation* p = ref(j.first);
      if (!p) return dangling(j.first);
      const Equation* q = ref(j.second);
      if (!q) return dangling(j.second);
      if (!(p->rhs == q->lhs))
        return fail(step, CheckErrorKind::ShapeMismatch,
                    "transitivity: right side of step " + std::to_string(j.first) +
                        " differs from left side of step " + std::to_string(j.second));
      return expectEq({p->lhs, q->rhs}, "transitivity");
    }
    case Rule::CongruenceSum: {
      const Equation* p = ref(j.first);
      if (!p) return dangling(j.first);
      const Equation* q = ref(j.second);
      if (!q) return dangling(j.second);
      return expectEq({Monitor::sum(p->lhs, q->lhs), Monitor::sum(p->rhs, q->rhs)}, "sum congruence");
    }
    case Rule::CongruencePrefix: {
      const Equation* p = ref(j.first);
      if (!p) return dangling(j.first);
      if (!context.alphabet.contains(j.action))
        return fail(step, CheckErrorKind::ShapeMismatch, "action '" + j.action + "' is not in the alphabet");
      return expectEq({Monitor::prefix(j.action, p->lhs), Monitor::prefix(j.action, p->rhs)},
                      "prefix congruence");
    }
    case Rule::Substitutivity: {
      const Equation* p = ref(j.first);
      if (!p) return dangling(j.first);
      return expectEq(applySubst(j.sigma, *p), "substitutivity");
    }
    case Rule::Axiom: {
      if (!systemContains(context.system, j.schema, context.alphabet))
        return fail(step, CheckErrorKind::AxiomNotInSystem,
                    std::string(schemaName(j.schema)) + " is not an axiom of " +
                        std::string(systemName(context.system)));
      if (j.schema == Schema::O2 && context.bounds && j.bindings.trace && j.bindings.k &&
          (j.bindings.trace->size() > context.bounds->maxTraceLen || *j.bindings.k > context.bounds->maxK))
        return fail(step, CheckErrorKind::NotAnInstance, "O2 parameters exceed the declared bounds");
      Equation inst;
      try {
        inst = instantiate(j.schema, j.bindings, context.alphabet).equation;
      } catch (const AxiomError& e) {
        return fail(step, CheckErrorKind::NotAnInstance, e.what());
      }
      Equation want = applySubst(j.sigma, inst);
      if (step.equation == want) return std::nullopt;
      return fail(step, CheckErrorKind::NotAnInstance,
                  "instance is " + printEquation(want) + ", not " + printEquation(step.equation));
    }
  }
  return fail(step, CheckErrorKind::ShapeMismatch, "unknown rule");
}

std::optional<CheckError> checkDerivation(const Derivation& d, const std::optional<Equation>& claimed) {
  if (d.steps.empty()) return CheckError{0, CheckErrorKind::ConclusionMismatch, "derivation has no steps"};
  std::map<std::size_t, Equation> proven;
  for (const auto& step : d.steps) {
    if (proven.count(step.id))
      return CheckError{step.id, CheckErrorKind::ShapeMismatch, "duplicate step id"};
    if (auto err = checkStep(d, proven, step)) return err;
    proven.emplace(step.id, step.equation);
  }
  if (claimed && !(d.conclusion() == *claimed))
    return CheckError{d.steps.back().id, CheckErrorKind::ConclusionMismatch,
                      "derivation proves " + printEquation(d.conclusion()) + ", not " + printEquation(*claimed)};
  return std::nullopt;
}

namespace {

std::string writeRule(const Justification& j) {
  auto id = [](std::size_t n) { return std::to_string(n); };
  switch (j.rule) {
    case Rule::Reflexivity: return "Reflexivity";
    case Rule::Symmetry: return "Symmetry(" + id(j.first) + ")";
    case Rule::Transitivity: return "Transitivity(" + id(j.first) + ", " + id(j.second) + ")";
    case Rule::CongruenceSum: return "CongruenceSum(" + id(j.first) + ", " + id(j.second) + ")";
    case Rule::CongruencePrefix: return "CongruencePrefix(" + j.action + ", " + id(j.first) + ")";
    case Rule::Substitutivity:
      return "Substitutivity(" + id(j.first) + (j.sigma.empty() ? "" : "; " + printSubstitution(j.sigma)) + ")";
    case Rule::Axiom: {
      std::string out = "Axiom(" + std::string(schemaName(j.schema));
      if (j.bindings.action) out += "; a=" + *j.bindings.action;
      if (j.bindings.trace) out += "; s=" + joinTrace(*j.bindings.trace);
      if (j.bindings.k) out += "; k=" + std::to_string(*j.bindings.k);
      if (!j.sigma.empty()) out += "; " + printSubstitution(j.sigma);
      return out + ")";
    }
  }
  return "?";
}

void collectVars(const Monitor& m, std::set<std::string>& out) {
  auto v = varsOf(m);
  out.insert(v.begin(), v.end());
}

}  // namespace

std::string writeDerivation(const Derivation& d) {
  std::string out;
  out += "system: " + std::string(systemName(d.system)) + "\n";
  out += "alphabet: " + toString(d.alphabet) + "\n";
  if (d.bounds)
    out += "bounds: s=" + std::to_string(d.bounds->maxTraceLen) + " k=" + std::to_string(d.bounds->maxK) + "\n";
  if (!d.alphabet.isFinite()) {
    std::set<std::string> vars;
    for (const auto& s : d.steps) {
      collectVars(s.equation.lhs, vars);
      collectVars(s.equation.rhs, vars);
      for (const auto& [x, t] : s.justification.sigma.mapping()) {
        vars.insert(x);
        collectVars(t, vars);
      }
    }
    if (!vars.empty()) {
      out += "vars: ";
      bool first = true;
      for (const auto& v : vars) {
        out += (first ? "" : ", ") + v;
        first = false;
      }
      out += "\n";
    }
  }
  for (const auto& s : d.steps)
    out += "step " + std::to_string(s.id) + ": " + printEquation(s.equation) + " by " + writeRule(s.justification) +
           "\n";
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t at = s.find(sep, pos);
    if (at == std::string_view::npos) {
      out.push_back(trim(s.substr(pos)));
      return out;
    }
    out.push_back(trim(s.substr(pos, at - pos)));
    pos = at + 1;
  }
}

struct LineReader {
  std::size_t lineNo;
  std::size_t offset;
  std::size_t length;

  [[noreturn]] void error(const std::string& message) const {
    throw ParseError(ParseErrorKind::UnexpectedToken, SourceSpan{lineNo, 1, offset, length}, message);
  }

  std::size_t number(std::string_view text) const {
    text = trim(text);
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      error("expected a step number, found '" + std::string(text) + "'");
    return std::stoul(std::string(text));
  }
};

Substitution parseSubstList(std::string_view text, const TermContext& ctx, const LineReader& lr) {
  Substitution sigma;
  for (auto item : split(text, ',')) {
    auto arrow = item.find("->");
    if (arrow == std::string_view::npos) lr.error("expected 'x -> term' in substitution");
    std::string var(trim(item.substr(0, arrow)));
    if (!isIdentifier(var) || isReservedWord(var)) lr.error("bad variable '" + var + "' in substitution");
    sigma.set(var, parseMonitor(item.substr(arrow + 2), ctx));
  }
  return sigma;
}

Justification parseRule(std::string_view text, const TermContext& ctx, const LineReader& lr) {
  Justification j;
  text = trim(text);
  std::string_view name = text;
  std::string_view args;
  if (auto open = text.find('('); open != std::string_view::npos) {
    if (text.back() != ')') lr.error("rule arguments must end with ')'");
    name = trim(text.substr(0, open));
    args = text.substr(open + 1, text.size() - open - 2);
  }
  auto segs = split(args, ';');
  auto pair = [&](std::string_view seg) {
    auto parts = split(seg, ',');
    if (parts.size() != 2) lr.error("expected two arguments");
    return parts;
  };
  if (name == "Reflexivity") {
    j.rule = Rule::Reflexivity;
  } else if (name == "Symmetry") {
    j.rule = Rule::Symmetry;
    j.first = lr.number(segs[0]);
  } else if (name == "Transitivity" || name == "CongruenceSum") {
    j.rule = name == "Transitivity" ? Rule::Transitivity : Rule::CongruenceSum;
    auto parts = pair(segs[0]);
    j.first = lr.number(parts[0]);
    j.second = lr.number(parts[1]);
  } else if (name == "CongruencePrefix") {
    j.rule = Rule::CongruencePrefix;
    auto parts = pair(segs[0]);
    j.action = std::string(parts[0]);
    j.first = lr.number(parts[1]);
  } else if (name == "Substitutivity") {
    j.rule = Rule::Substitutivity;
    j.first = lr.number(segs[0]);
    if (segs.size() > 2) lr.error("Substitutivity takes a step and one substitution");
    if (segs.size() == 2 && !segs[1].empty()) j.sigma = parseSubstList(segs[1], ctx, lr);
  } else if (name == "Axiom") {
    j.rule = Rule::Axiom;
    auto schema = parseSchemaName(segs[0]);
    if (!schema) lr.error("unknown axiom '" + std::string(segs[0]) + "'");
    j.schema = *schema;
    for (std::size_t i = 1; i < segs.size(); ++i) {
      std::string_view seg = segs[i];
      if (seg.find("->") != std::string_view::npos) {
        j.sigma = parseSubstList(seg, ctx, lr);
      } else if (seg.rfind("a=", 0) == 0) {
        j.bindings.action = std::string(trim(seg.substr(2)));
      } else if (seg.rfind("s=", 0) == 0) {
        j.bindings.trace = parseTrace(seg.substr(2));
      } else if (seg.rfind("k=", 0) == 0) {
        j.bindings.k = static_cast<unsigned>(lr.number(seg.substr(2)));
      } else {
        lr.error("unknown axiom argument '" + std::string(seg) + "'");
      }
    }
  } else {
    lr.error("unknown rule '" + std::string(name) + "'");
  }
  return j;
}

}  // namespace

Derivation readDerivation(std::string_view text) {
  Derivation d;
  bool haveSystem = false;
  bool haveAlphabet = false;
  std::set<std::string> vars;
  std::size_t offset = 0;
  std::size_t lineNo = 1;
  while (offset <= text.size()) {
    std::size_t nl = std::min(text.find('\n', offset), text.size());
    std::string_view line = text.substr(offset, nl - offset);
    line = trim(line.substr(0, std::min(line.find('#'), line.size())));
    LineReader lr{lineNo, offset, nl - offset};
    if (!line.empty()) {
      if (line.rfind("system:", 0) == 0) {
        auto sys = parseSystemName(trim(line.substr(7)));
        if (!sys) lr.error("unknown axiom system '" + std::string(trim(line.substr(7))) + "'");
        d.system = *sys;
        haveSystem = true;
      } else if (line.rfind("alphabet:", 0) == 0) {
        d.alphabet = parseAlphabet(line.substr(9));
        haveAlphabet = true;
      } else if (line.rfind("bounds:", 0) == 0) {
        SchemaBounds b;
        for (auto part : split(trim(line.substr(7)), ' ')) {
          if (part.rfind("s=", 0) == 0) b.maxTraceLen = lr.number(part.substr(2));
          else if (part.rfind("k=", 0) == 0) b.maxK = static_cast<unsigned>(lr.number(part.substr(2)));
          else if (!part.empty()) lr.error("bad bounds entry '" + std::string(part) + "'");
        }
        d.bounds = b;
      } else if (line.rfind("vars:", 0) == 0) {
        for (auto v : split(line.substr(5), ','))
          if (!v.empty()) vars.insert(std::string(v));
      } else if (line.rfind("step", 0) == 0) {
        if (!haveSystem || !haveAlphabet) lr.error("'system:' and 'alphabet:' must precede the steps");
        auto colon = line.find(':');
        auto by = line.rfind(" by ");
        if (colon == std::string_view::npos || by == std::string_view::npos || by < colon)
          lr.error("expected 'step <id>: <lhs> = <rhs> by <rule>'");
        Step step;
        step.id = lr.number(line.substr(4, colon - 4));
        TermContext ctx{d.alphabet, vars};
        try {
          step.equation = parseEquation(line.substr(colon + 1, by - colon - 1), ctx);
        } catch (const ParseError& e) {
          lr.error("step " + std::to_string(step.id) + ": " + e.detail());
        }
        step.justification = parseRule(line.substr(by + 4), ctx, lr);
        d.steps.push_back(std::move(step));
      } else {
        lr.error("unrecognised line");
      }
    }
    if (nl == text.size()) break;
    offset = nl + 1;
    ++lineNo;
  }
  if (d.steps.empty())
    throw ParseError(ParseErrorKind::EmptyInput, SourceSpan{lineNo, 1, text.size(), 0}, "derivation has no steps");
  return d;
}

}  // namespace monalg
