// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Exit codes: 0 success, equivalent or valid; 1 a
// negative result; 2 usage, parse or configuration errors.
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "monalg/axioms.hpp"
#include "monalg/equivalence.hpp"
#include "monalg/fuzz.hpp"
#include "monalg/normalize.hpp"
#include "monalg/prooflog.hpp"
#include "monalg/semantics.hpp"
#include "monalg/syntax.hpp"

using namespace monalg;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Inline text, or the contents of a file for "@path".
std::string inputText(const std::string& arg) { return arg.rfind('@', 0) == 0 ? readFile(arg.substr(1)) : arg; }

std::string headerAlphabet(const std::string& text) {
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    auto pos = line.find_first_not_of(" \t");
    if (pos != std::string::npos && line.compare(pos, 9, "alphabet:") == 0) return line.substr(pos + 9);
  }
  return {};
}

// Identifiers not followed by '.', skipping header lines: the variables of
// inputs over the open-ended alphabet when --vars is not given.
std::set<std::string> inferVars(const std::string& text) {
  std::set<std::string> out;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    auto pos = line.find_first_not_of(" \t");
    if (pos != std::string::npos && (line.compare(pos, 9, "alphabet:") == 0 || line.compare(pos, 5, "vars:") == 0))
      continue;
    auto tokens = tokenize(line);
    for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
      if (tokens[i].kind != TokenKind::Ident || isReservedWord(tokens[i].text)) continue;
      auto next = tokens[i + 1].kind;
      if (next != TokenKind::Dot && next != TokenKind::Define) out.insert(tokens[i].text);
    }
  }
  return out;
}

struct Common {
  std::string alphabet;
  std::string vars;
};

void addCommon(CLI::App* sub, Common& common) {
  sub->add_option("--alphabet", common.alphabet, "comma-separated actions, or 'infinite'");
  sub->add_option("--vars", common.vars, "variable names for the infinite alphabet (default: inferred)");
}

// Parsing context shared by all inputs of one command.
struct Inputs {
  Alphabet alphabet = Alphabet::openEnded();
  std::set<std::string> vars;
  std::vector<std::string> texts;
};

Inputs prepare(const Common& common, const std::vector<std::string>& args) {
  Inputs in;
  for (const auto& a : args) in.texts.push_back(inputText(a));
  std::string alphabetText = common.alphabet;
  if (alphabetText.empty())
    for (const auto& t : in.texts)
      if (auto h = headerAlphabet(t); !h.empty()) {
        alphabetText = h;
        break;
      }
  in.alphabet = alphabetText.empty() ? Alphabet::openEnded() : parseAlphabet(alphabetText);
  if (!common.vars.empty()) {
    std::stringstream ss(common.vars);
    std::string v;
    while (std::getline(ss, v, ','))
      if (!v.empty()) in.vars.insert(v);
  } else if (!in.alphabet.isFinite()) {
    for (const auto& t : in.texts) {
      auto more = inferVars(t);
      in.vars.insert(more.begin(), more.end());
    }
  }
  return in;
}

MonitorFile parseInput(const Inputs& in, std::size_t i) {
  return parseMonitorFile(in.texts[i], in.alphabet, in.vars);
}

Monitor singleTerm(const Inputs& in, std::size_t i) {
  MonitorFile f = parseInput(in, i);
  if (f.terms.size() == 1 && f.definitions.empty()) return f.terms[0];
  if (f.terms.empty() && f.definitions.size() == 1) return f.definitions[0].second;
  throw UsageError("expected exactly one term in input " + std::to_string(i + 1));
}

json substJson(const Substitution& s) {
  json out = json::object();
  for (const auto& [x, m] : s.mapping()) out[x] = printMonitor(m);
  return out;
}

json cexJson(const Counterexample& c) {
  return json{{"substitution", substJson(c.substitution)}, {"trace", printTrace(c.trace)}, {"side", toString(c.side)}};
}

void printCex(std::ostream& out, const Counterexample& c) {
  out << "substitution:";
  if (c.substitution.empty()) out << " identity";
  out << "\n";
  for (const auto& [x, m] : c.substitution.mapping()) out << "  " << x << " -> " << printMonitor(m) << "\n";
  out << "trace: " << printTrace(c.trace) << "\n";
  out << "side: " << toString(c.side) << "\n";
}

EquivMode parseMode(const std::string& s) {
  if (s == "verdict") return EquivMode::Verdict;
  if (s == "omega") return EquivMode::OmegaVerdict;
  throw UsageError("unknown mode '" + s + "' (verdict or omega)");
}

FormKind parseForm(const std::string& s) {
  auto f = parseFormName(s);
  if (!f) throw UsageError("unknown form '" + s + "'");
  return *f;
}

// Result of one command: the text for standard output, the JSON result and
// the exit code.
struct Outcome {
  std::string text;
  json result = json::object();
  std::optional<json> counterexample;
  int code = kOk;
};

// --- subcommands

Outcome cmdParse(const Common& common, const std::vector<std::string>& args) {
  Inputs in = prepare(common, args);
  Outcome o;
  json terms = json::array();
  for (std::size_t i = 0; i < in.texts.size(); ++i) {
    MonitorFile f = parseInput(in, i);
    auto emit = [&](const Monitor& m, const std::string& name) {
      o.text += (name.empty() ? "" : name + " := ") + printMonitor(m) + "\n";
      json j{{"term", printMonitor(m)}, {"depth", depth(m)}, {"size", sizeOf(m)},
             {"vars", varsOf(m)}, {"actions", actionsOf(m)}};
      if (!name.empty()) j["name"] = name;
      terms.push_back(j);
    };
    for (const auto& [name, m] : f.definitions) emit(m, name);
    for (const auto& m : f.terms) emit(m, "");
    for (const auto& eq : f.equations) {
      o.text += printEquation(eq) + "\n";
      terms.push_back(json{{"equation", printEquation(eq)}});
    }
    if (!f.substitution.empty()) {
      for (const auto& [x, m] : f.substitution.mapping()) o.text += x + " -> " + printMonitor(m) + "\n";
      terms.push_back(json{{"substitution", substJson(f.substitution)}});
    }
  }
  o.result = json{{"alphabet", toString(in.alphabet)}, {"items", terms}};
  return o;
}

Outcome cmdLang(const Common& common, const std::string& term, const std::string& modeName) {
  Inputs in = prepare(common, {term});
  Monitor m = singleTerm(in, 0);
  EquivMode mode = parseMode(modeName);
  TraceLang lang = langOf(m, in.alphabet);
  if (mode == EquivMode::OmegaVerdict && in.alphabet.isFinite()) {
    lang.acceptMin = omegaCanon(lang.acceptMin, in.alphabet);
    lang.rejectMin = omegaCanon(lang.rejectMin, in.alphabet);
  }
  Outcome o;
  o.text = "accept:\n";
  for (const auto& t : lang.acceptMin) o.text += printTrace(t) + "\n";
  o.text += "reject:\n";
  for (const auto& t : lang.rejectMin) o.text += printTrace(t) + "\n";
  json acc = json::array(), rej = json::array();
  for (const auto& t : lang.acceptMin) acc.push_back(printTrace(t));
  for (const auto& t : lang.rejectMin) rej.push_back(printTrace(t));
  o.result = json{{"term", printMonitor(m)}, {"mode", toString(mode)}, {"accept", acc}, {"reject", rej}};
  return o;
}

Outcome cmdEquiv(const Common& common, const std::vector<std::string>& args, const std::string& modeName,
                 bool forceOracle, std::optional<std::size_t> bound) {
  Inputs in = prepare(common, args);
  Equation eq;
  if (args.size() == 1) {
    MonitorFile f = parseInput(in, 0);
    if (f.equations.size() != 1 || !f.terms.empty()) throw UsageError("expected one equation 'lhs = rhs'");
    eq = f.equations[0];
  } else if (args.size() == 2) {
    eq = Equation{singleTerm(in, 0), singleTerm(in, 1)};
  } else {
    throw UsageError("equiv takes two terms or one equation");
  }
  const EquivMode mode = parseMode(modeName);
  const bool closed = isClosed(eq.lhs) && isClosed(eq.rhs);
  const std::size_t d = bound ? *bound : defaultBound(eq.lhs, eq.rhs);

  Outcome o;
  std::string method;
  bool equivalent;
  std::optional<Counterexample> cex;
  if (closed) {
    method = "closed";
    auto r = equivClosed(eq.lhs, eq.rhs, in.alphabet, mode);
    equivalent = r.equivalent;
    cex = r.counterexample;
  } else if (forceOracle) {
    method = "oracle";
    OracleOptions opts;
    opts.minimize = true;
    auto r = oracleEquivOpen(eq.lhs, eq.rhs, in.alphabet, mode, d, opts);
    equivalent = r.equivalent;
    cex = r.counterexample;
  } else {
    method = "canonical";
    equivalent = equivOpen(eq.lhs, eq.rhs, in.alphabet, mode);
    if (!equivalent) {
      if (!in.alphabet.isFinite()) {
        auto sigma = freshActionSubstitution(eq.lhs, eq.rhs);
        auto r = verdictEquivClosed(applySubst(sigma, eq.lhs), applySubst(sigma, eq.rhs), in.alphabet);
        cex = r.counterexample;
        if (cex) cex->substitution = sigma;
      } else {
        OracleOptions opts;
        opts.minimize = true;
        cex = oracleEquivOpen(eq.lhs, eq.rhs, in.alphabet, mode, d, opts).counterexample;
      }
    }
  }
  o.code = equivalent ? kOk : kNegative;
  o.text = equivalent ? "equivalent\n" : "inequivalent\n";
  if (cex) {
    std::ostringstream s;
    printCex(s, *cex);
    o.text += s.str();
    o.counterexample = cexJson(*cex);
  } else if (!equivalent) {
    o.text += "counterexample: none within bound " + std::to_string(d) + "\n";
  }
  o.result = json{{"equivalent", equivalent}, {"mode", toString(mode)}, {"method", method},
                  {"alphabet", toString(in.alphabet)}};
  if (!closed) o.result["bound"] = d;
  return o;
}

Outcome cmdNormalize(const Common& common, const std::string& term, const std::string& formName,
                     const std::string& proofPath, bool printProof) {
  Inputs in = prepare(common, {term});
  FormKind kind = parseForm(formName);
  if (printProof) {
    MonitorFile f = parseInput(in, 0);
    if (f.equations.size() == 1 && f.terms.empty()) {
      auto d = proveEquation(kind, f.equations[0], in.alphabet);
      Outcome o;
      o.result = json{{"equation", printEquation(f.equations[0])}, {"form", monalg::formName(kind)},
                      {"proved", d.has_value()}};
      if (!d) {
        o.code = kNegative;
        o.text = "not provable: the " + std::string(monalg::formName(kind)) + " forms differ\n";
        return o;
      }
      o.text = writeDerivation(*d);
      o.result["steps"] = d->steps.size();
      if (!proofPath.empty()) {
        std::ofstream out(proofPath, std::ios::binary);
        if (!out) throw UsageError("cannot write '" + proofPath + "'");
        out << o.text;
        o.result["proof"] = proofPath;
      }
      return o;
    }
  }
  Monitor m = singleTerm(in, 0);
  const bool wantProof = printProof || !proofPath.empty();
  CanonicalForm cf = normalize(kind, m, in.alphabet, wantProof);
  Outcome o;
  o.result = json{{"input", printMonitor(m)}, {"form", monalg::formName(kind)}, {"term", printMonitor(cf.term)}};
  if (printProof) {
    o.text = writeDerivation(*cf.derivation);
    o.result["steps"] = cf.derivation->steps.size();
  } else {
    o.text = printMonitor(cf.term) + "\n";
  }
  if (!proofPath.empty()) {
    std::ofstream out(proofPath, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + proofPath + "'");
    out << writeDerivation(*cf.derivation);
    o.result["proof"] = proofPath;
    o.result["steps"] = cf.derivation->steps.size();
  }
  return o;
}

Outcome cmdCheckProof(const std::string& path, const std::string& claim) {
  std::string text = inputText(path.rfind('@', 0) == 0 ? path : "@" + path);
  Derivation d = readDerivation(text);
  std::optional<Equation> claimed;
  if (!claim.empty()) {
    TermContext ctx{d.alphabet, {}};
    if (!d.alphabet.isFinite()) ctx.vars = inferVars(claim);
    claimed = parseEquation(claim, ctx);
  }
  auto err = checkDerivation(d, claimed);
  Outcome o;
  o.result = json{{"system", systemName(d.system)}, {"steps", d.steps.size()}, {"valid", !err.has_value()}};
  if (err) {
    o.code = kNegative;
    o.text = "invalid: step " + std::to_string(err->stepId) + ": " + std::string(toString(err->kind)) + ": " +
             err->message + "\n";
    o.result["error"] = json{{"step", err->stepId}, {"kind", toString(err->kind)}, {"message", err->message}};
  } else {
    o.text = "valid: " + printEquation(d.steps.back().equation) + "\n";
    o.result["conclusion"] = printEquation(d.steps.back().equation);
  }
  return o;
}

std::string describe(const AxiomInstance& inst) {
  std::string out(schemaName(inst.schema));
  if (inst.bindings.action) out += "; a=" + *inst.bindings.action;
  if (inst.bindings.trace) {
    std::string s;
    for (const auto& a : *inst.bindings.trace) s += (s.empty() ? "" : ".") + a;
    out += "; s=" + s;
  }
  if (inst.bindings.k) out += "; k=" + std::to_string(*inst.bindings.k);
  return out;
}

Outcome cmdAxioms(const Common& common, const std::string& systemArg, std::optional<std::size_t> maxS,
                  std::optional<unsigned> maxK, std::size_t fuzz, std::uint64_t seed, const std::string& modeArg) {
  Inputs in = prepare(common, {});
  auto system = parseSystemName(systemArg);
  if (!system) throw UsageError("unknown system '" + systemArg + "'");
  std::optional<SchemaBounds> bounds;
  if (maxS || maxK) bounds = SchemaBounds{maxS.value_or(1), maxK.value_or(1)};
  auto instances = listSystem(*system, in.alphabet, bounds);

  const bool omegaSystem =
      *system == SystemName::Eomega || *system == SystemName::Eomega1Prime || *system == SystemName::EomegafPrime;
  EquivMode mode = modeArg.empty() ? (omegaSystem ? EquivMode::OmegaVerdict : EquivMode::Verdict) : parseMode(modeArg);

  Outcome o;
  o.text = "system: " + std::string(systemName(*system)) + "\nalphabet: " + toString(in.alphabet) + "\n";
  json list = json::array();
  std::size_t failures = 0;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto& inst = instances[i];
    o.text += printEquation(inst.equation) + "  # " + describe(inst) + "\n";
    json j{{"schema", describe(inst)}, {"equation", printEquation(inst.equation)}};
    if (fuzz > 0) {
      auto report = soundnessFuzz(inst, in.alphabet, mode, fuzz, trialSeed(seed, i));
      j["failures"] = report.failures.size();
      if (!report.failures.empty()) {
        ++failures;
        const auto& c = report.failures.front().counterexample;
        o.text += "# unsound in " + std::string(toString(mode)) + " mode: " + std::to_string(report.failures.size()) +
                  "/" + std::to_string(fuzz) + " trials fail, e.g. " + printSubstitution(c.substitution) +
                  " at " + printTrace(c.trace) + " (" + std::string(toString(c.side)) + ")\n";
        j["counterexample"] = cexJson(c);
      }
    }
    list.push_back(j);
  }
  if (fuzz > 0) {
    o.text += "# " + std::to_string(instances.size() - failures) + "/" + std::to_string(instances.size()) +
              " instances pass " + std::to_string(fuzz) + " trials\n";
    if (failures > 0) o.code = kNegative;
  }
  o.result = json{{"system", systemName(*system)}, {"alphabet", toString(in.alphabet)}, {"instances", list}};
  if (fuzz > 0) o.result["mode"] = toString(mode);
  return o;
}

Outcome cmdFuzz(const Common& common, const std::string& modeArg, bool open, std::size_t trials, std::uint64_t seed,
                std::size_t maxDepth, std::size_t maxSize) {
  Inputs in = prepare(common, {});
  CrossCheckConfig cfg;
  cfg.alphabet = in.alphabet;
  cfg.mode = parseMode(modeArg);
  cfg.open = open;
  cfg.trials = trials;
  cfg.seed = seed;
  cfg.gen.maxDepth = maxDepth;
  cfg.gen.maxSize = maxSize;
  if (cfg.alphabet.isFinite()) cfg.gen.actions = cfg.alphabet.actions();
  auto report = crossCheck(cfg);

  Outcome o;
  const FormKind form = crossCheckForm(cfg.alphabet, cfg.mode, open);
  o.text = "form: " + std::string(formName(form)) + "\ntrials: " + std::to_string(report.trials) +
           "\nequivalent: " + std::to_string(report.equivalentPairs) +
           "\ndisagreements: " + std::to_string(report.disagreements.size()) + "\n";
  json dis = json::array();
  for (const auto& d : report.disagreements) {
    o.text += "trial " + std::to_string(d.trial) + ": " + printMonitor(d.left) + " = " + printMonitor(d.right) +
              "  # canonical " + (d.canonicalEqual ? "equal" : "different") + ", semantics " +
              (d.semanticEqual ? "equivalent" : "inequivalent") + "\n";
    json j{{"trial", d.trial}, {"equation", printEquation({d.left, d.right})},
           {"canonicalEqual", d.canonicalEqual}, {"semanticEqual", d.semanticEqual}};
    if (d.counterexample) j["counterexample"] = cexJson(*d.counterexample);
    dis.push_back(j);
  }
  if (!report.disagreements.empty()) o.code = kNegative;
  o.result = json{{"form", formName(form)}, {"alphabet", toString(cfg.alphabet)}, {"mode", toString(cfg.mode)},
                  {"open", open}, {"seed", seed}, {"trials", report.trials},
                  {"equivalent", report.equivalentPairs}, {"disagreements", dis}};
  return o;
}

Outcome cmdWitness(const Common& common, unsigned n, std::size_t fuzz, std::uint64_t seed) {
  Inputs in = prepare(common, {});
  Equation eq = witnessFamily(n, in.alphabet);
  Outcome o;
  o.text = printEquation(eq) + "\n";
  o.result = json{{"n", n}, {"equation", printEquation(eq)}};

  // Under x -> end neither side decides the trace a^(2n+1).
  const std::string a = in.alphabet.contains("a") ? "a" : in.alphabet.actions().front();
  Trace probe(2 * n + 1, a);
  Substitution toEnd;
  toEnd.set("x", Monitor::end());
  bool undecided = true;
  for (const Monitor* side : {&eq.lhs, &eq.rhs}) {
    Monitor closed = applySubst(toEnd, *side);
    undecided = undecided && !accepts(closed, probe) && !rejects(closed, probe);
  }
  o.text += "trace " + printTrace(probe) + " under x -> end: " + (undecided ? "undecided" : "decided") + "\n";
  o.result["undecidedTrace"] = undecided;
  if (!undecided) o.code = kNegative;

  if (fuzz > 0) {
    AxiomInstance inst{Schema::O2, Bindings{std::nullopt, Trace(n, a), 3u}, eq};
    auto report = soundnessFuzz(inst, in.alphabet, EquivMode::Verdict, fuzz, seed);
    o.text += "fuzz: " + std::to_string(fuzz - report.failures.size()) + "/" + std::to_string(fuzz) + " trials pass\n";
    o.result["fuzzFailures"] = report.failures.size();
    if (!report.failures.empty()) {
      o.code = kNegative;
      o.counterexample = cexJson(report.failures.front().counterexample);
    }
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Recursion-free regular monitors: parsing, semantics, equivalence, normal forms and proofs"};
  app.require_subcommand(1);
  bool asJson = false;
  app.add_flag("--json", asJson, "emit a JSON result envelope");
  app.fallthrough();

  Common common;
  std::vector<std::string> terms;
  std::string term, mode = "verdict", form, proofPath, claim, system;
  bool oracle = false, open = false;
  std::optional<std::size_t> bound, maxS;
  std::optional<unsigned> maxK;
  std::size_t trials = 100, fuzz = 0, maxDepth = 3, maxSize = 24;
  std::uint64_t seed = 1;
  unsigned n = 1;

  auto* parse = app.add_subcommand("parse", "parse and pretty-print terms, equations or substitutions");
  parse->add_option("inputs", terms, "inline text or @file")->required();
  addCommon(parse, common);

  auto* lang = app.add_subcommand("lang", "print the minimal accepted and rejected traces of a closed term");
  lang->add_option("term", term)->required();
  lang->add_option("--mode", mode, "verdict or omega");
  addCommon(lang, common);

  auto* equiv = app.add_subcommand("equiv", "decide verdict or omega-verdict equivalence");
  equiv->add_option("terms", terms, "two terms, or one equation")->required();
  equiv->add_option("--mode", mode, "verdict or omega");
  equiv->add_flag("--oracle", oracle, "use the substitution oracle for open terms");
  equiv->add_option("--bound", bound, "oracle bound D (default: depth sum + 2)");
  addCommon(equiv, common);

  auto* normalizeCmd = app.add_subcommand("normalize", "compute a canonical form");
  normalizeCmd->add_option("term", term)->required();
  normalizeCmd->add_option("--form", form, "nf|rnf|omega|open-nf|open-rnf|fin-rnf|unary-rnf|unary-omega|open-omega")
      ->required();
  normalizeCmd->add_option("--emit-proof", proofPath, "write the derivation to this file");
  addCommon(normalizeCmd, common);

  auto* prove = app.add_subcommand("prove", "print a derivation of term = canonical form, or of an equation");
  prove->add_option("term", term)->required();
  prove->add_option("--form", form)->required();
  prove->add_option("--out", proofPath, "also write the derivation to this file");
  addCommon(prove, common);

  auto* check = app.add_subcommand("check-proof", "validate a derivation file");
  check->add_option("file", term)->required();
  check->add_option("--claim", claim, "equation the derivation must conclude");

  auto* axioms = app.add_subcommand("axioms", "list the instances of an axiom system");
  axioms->add_option("--system", system, "Ev|Eomega|Ev'|Evf'|Ev1'|Eomega1'|Eomegaf'")->required();
  axioms->add_option("--max-s", maxS, "longest O2 trace");
  axioms->add_option("--max-k", maxK, "largest O2 k");
  axioms->add_option("--fuzz", fuzz, "random closed substitutions per instance");
  axioms->add_option("--seed", seed);
  axioms->add_option("--mode", mode, "verdict or omega (default: by system)");
  addCommon(axioms, common);

  auto* fuzzCmd = app.add_subcommand("fuzz", "cross-check canonical forms against the semantics on random pairs");
  fuzzCmd->add_option("--mode", mode, "verdict or omega");
  fuzzCmd->add_flag("--open", open, "pairs with variables x and y");
  fuzzCmd->add_option("--trials", trials);
  fuzzCmd->add_option("--seed", seed);
  fuzzCmd->add_option("--depth", maxDepth, "maximum prefix depth");
  fuzzCmd->add_option("--size", maxSize, "node budget per term");
  addCommon(fuzzCmd, common);

  auto* witness = app.add_subcommand("witness", "the O2 family member with s = a^n and k = 3");
  witness->add_option("--n", n)->check(CLI::PositiveNumber);
  witness->add_option("--fuzz", fuzz, "random closed substitutions");
  witness->add_option("--seed", seed);
  addCommon(witness, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const auto started = std::chrono::steady_clock::now();
  std::string command = app.get_subcommands().front()->get_name();
  const std::string givenAlphabet = common.alphabet;
  if (common.alphabet.empty() && (fuzzCmd->parsed() || witness->parsed())) common.alphabet = "a,b";
  Outcome outcome;
  try {
    if (parse->parsed()) outcome = cmdParse(common, terms);
    else if (lang->parsed()) outcome = cmdLang(common, term, mode);
    else if (equiv->parsed()) outcome = cmdEquiv(common, terms, mode, oracle, bound);
    else if (normalizeCmd->parsed()) outcome = cmdNormalize(common, term, form, proofPath, false);
    else if (prove->parsed()) outcome = cmdNormalize(common, term, form, proofPath, true);
    else if (check->parsed()) outcome = cmdCheckProof(term, claim);
    else if (axioms->parsed())
      outcome = cmdAxioms(common, system, maxS, maxK, fuzz, seed, axioms->count("--mode") ? mode : std::string());
    else if (fuzzCmd->parsed()) outcome = cmdFuzz(common, mode, open, trials, seed, maxDepth, maxSize);
    else if (witness->parsed()) outcome = cmdWitness(common, n, fuzz, seed);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.span().line << ":" << e.span().column << ": " << toString(e.kind()) << ": "
              << e.detail() << "\n";
    return kUsage;
  } catch (const NormalizeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == NormalizeErrorKind::DerivationUnavailable ? kNegative : kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }

  if (asJson) {
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    json inputs = json::object();
    if (!terms.empty()) inputs["terms"] = terms;
    if (!term.empty()) inputs["term"] = term;
    if (!givenAlphabet.empty()) inputs["alphabet"] = givenAlphabet;
    json envelope{{"command", command}, {"inputs", inputs}, {"result", outcome.result}, {"timing", {{"seconds", seconds}}}};
    if (outcome.counterexample) envelope["counterexample"] = *outcome.counterexample;
    std::cout << envelope.dump(2) << "\n";
  } else {
    std::cout << outcome.text;
  }
  return outcome.code;
}
