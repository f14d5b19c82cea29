// SPDX-License-Identifier: Apache-2.0
#include "monalg/fuzz.hpp"

namespace monalg {

SoundnessReport soundnessFuzz(const AxiomInstance& inst, const Alphabet& alphabet, EquivMode mode,
                              std::size_t trials, std::uint64_t seed) {
  if (!alphabet.isFinite()) throw Error("soundness fuzzing needs a finite alphabet");
  auto vars = varsOf(inst.equation.lhs);
  auto more = varsOf(inst.equation.rhs);
  vars.insert(more.begin(), more.end());
  const std::vector<std::string> names(vars.begin(), vars.end());

  GenConfig gen;
  gen.actions = alphabet.actions();
  gen.vars.clear();
  gen.maxDepth = 3;
  gen.maxSize = 12;

  SoundnessReport report;
  report.trials = trials;
  for (std::size_t i = 0; i < trials; ++i) {
    TermGen rng(trialSeed(seed, i));
    Substitution sigma = rng.closedSubstitution(names, gen);
    auto r = equivClosed(applySubst(sigma, inst.equation.lhs), applySubst(sigma, inst.equation.rhs), alphabet, mode);
    if (r.equivalent) continue;
    r.counterexample->substitution = sigma;
    report.failures.push_back(SoundnessFailure{i, *r.counterexample});
  }
  return report;
}

FormKind crossCheckForm(const Alphabet& alphabet, EquivMode mode, bool open) {
  const bool omega = mode == EquivMode::OmegaVerdict && alphabet.isFinite();
  if (!open) return omega ? FormKind::OmegaNF : FormKind::RNF;
  if (!alphabet.isFinite()) return FormKind::OpenRNF;
  if (alphabet.size() == 1) return omega ? FormKind::UnaryOmegaNF : FormKind::UnaryRNF;
  return omega ? FormKind::OpenOmegaNF : FormKind::FinRNF;
}

EquivResult semanticEquiv(const Monitor& m, const Monitor& n, const Alphabet& alphabet, EquivMode mode, bool open) {
  if (!open || (isClosed(m) && isClosed(n))) return equivClosed(m, n, alphabet, mode);
  if (alphabet.isFinite()) return oracleEquivOpen(m, n, alphabet, mode, defaultBound(m, n));
  auto sigma = freshActionSubstitution(m, n);
  auto r = verdictEquivClosed(applySubst(sigma, m), applySubst(sigma, n), alphabet);
  if (r.counterexample) r.counterexample->substitution = sigma;
  return r;
}

CrossCheckReport crossCheck(const CrossCheckConfig& config) {
  GenConfig gen = config.gen;
  if (config.alphabet.isFinite()) gen.actions = config.alphabet.actions();
  if (!config.open) gen.vars.clear();
  ScrambleRules rules;
  rules.omega = config.mode == EquivMode::OmegaVerdict && config.alphabet.isFinite();
  rules.unaryVars = config.alphabet.isFinite() && config.alphabet.size() == 1;

  const FormKind form = crossCheckForm(config.alphabet, config.mode, config.open);
  const Alphabet& alphabet = config.alphabet;
  auto canonicalEqual = [&](const Monitor& m, const Monitor& n) {
    return acEqual(normalize(form, m, alphabet).term, normalize(form, n, alphabet).term);
  };

  CrossCheckReport report;
  report.trials = config.trials;
  for (std::size_t i = 0; i < config.trials; ++i) {
    TermGen rng(trialSeed(config.seed, i));
    auto [m, n] = rng.pair(gen, rules);
    const bool canon = canonicalEqual(m, n);
    auto sem = semanticEquiv(m, n, alphabet, config.mode, config.open);
    if (sem.equivalent) ++report.equivalentPairs;
    if (canon == sem.equivalent) continue;
    if (config.shrink) {
      auto small = shrinkPair({m, n}, [&](const Monitor& l, const Monitor& r) {
        return canonicalEqual(l, r) != semanticEquiv(l, r, alphabet, config.mode, config.open).equivalent;
      });
      m = small.first;
      n = small.second;
      sem = semanticEquiv(m, n, alphabet, config.mode, config.open);
    }
    report.disagreements.push_back(Disagreement{i, m, n, canonicalEqual(m, n), sem.equivalent, sem.counterexample});
  }
  return report;
}

}  // namespace monalg
