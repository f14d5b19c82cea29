// SPDX-License-Identifier: Apache-2.0
//
// Seeded random terms for property tests and fuzzing.
//
// Generator: at nesting level l a node is compound (prefix or sum) with
// probability decay^l, and a leaf otherwise; within each group the
// constructor is uniform (leaves: end, yes, no, and a variable when the pool
// is nonempty). Actions and variables are drawn uniformly from their pools.
// Prefixes stop being offered once the depth budget is used, and sums stop
// once the node budget is used. The default variable pool is {x, y}.
#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "monalg/term.hpp"

namespace monalg {

struct GenConfig {
  std::size_t maxDepth = 3;
  std::size_t maxSize = 24;
  double decay = 0.75;
  std::vector<std::string> actions{"a", "b"};
  std::vector<std::string> vars{"x", "y"};
};

// Rewrites allowed when building an equivalent partner term.
struct ScrambleRules {
  bool omega = false;        // yes -> fan(yes), no -> fan(no) over the generator actions
  bool unaryVars = false;    // x -> x + a.x
  std::size_t rounds = 4;
};

class TermGen {
 public:
  explicit TermGen(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& engine() { return rng_; }
  std::size_t below(std::size_t n);  // uniform in [0, n)
  bool chance(double p);

  Monitor term(const GenConfig& config);
  Trace trace(const std::vector<std::string>& actions, std::size_t maxLen);
  Substitution closedSubstitution(const std::vector<std::string>& vars, const GenConfig& config);

  // A term equivalent to m, obtained by random sound rewrites (AC
  // reshuffles, end padding, distribution, verdict absorption, padding under
  // yes + no, plus the optional rules).
  Monitor scramble(const Monitor& m, const GenConfig& config, const ScrambleRules& rules);
  // A small random edit of m: a leaf swapped, a prefix action changed, a
  // summand dropped or a random summand added.
  Monitor mutate(const Monitor& m, const GenConfig& config);

  // Pair mix: a third independent terms, a third scrambled, a third
  // scrambled and then mutated. A partner deeper than maxDepth is redrawn,
  // falling back to an independent term after eight tries.
  std::pair<Monitor, Monitor> pair(const GenConfig& config, const ScrambleRules& rules);

 private:
  Monitor node(const GenConfig& config, std::size_t level, std::size_t depthLeft, std::size_t& budget);
  Monitor rewriteAt(const Monitor& m, std::size_t target, std::size_t& index,
                    const std::function<Monitor(const Monitor&)>& f);

  std::mt19937_64 rng_;
};

// Per-trial seed derived from a base seed and a trial index.
std::uint64_t trialSeed(std::uint64_t seed, std::uint64_t trial);

// Greedy shrinking: repeatedly replaces a subterm of either side by end, by
// one of its children, or by a leaf, keeping the change while `stillFails`
// holds. Returns the smallest pair found.
std::pair<Monitor, Monitor> shrinkPair(std::pair<Monitor, Monitor> failing,
                                       const std::function<bool(const Monitor&, const Monitor&)>& stillFails);

// All subterms in pre-order (the root first).
std::vector<Monitor> subterms(const Monitor& m);

}  // namespace monalg
