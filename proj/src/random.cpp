// SPDX-License-Identifier: Apache-2.0
#include "monalg/random.hpp"

namespace monalg {

std::size_t TermGen::below(std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
}

bool TermGen::chance(double p) { return std::bernoulli_distribution(p)(rng_); }

Monitor TermGen::node(const GenConfig& config, std::size_t level, std::size_t depthLeft, std::size_t& budget) {
  if (budget > 0) --budget;
  double compound = 1.0;
  for (std::size_t i = 0; i < level; ++i) compound *= config.decay;
  const bool canPrefix = depthLeft > 0 && !config.actions.empty();
  const bool canSum = budget >= 2;
  if ((canPrefix || canSum) && chance(compound)) {
    bool prefix = canPrefix && (!canSum || chance(0.5));
    if (prefix) {
      const auto& a = config.actions[below(config.actions.size())];
      return Monitor::prefix(a, node(config, level + 1, depthLeft - 1, budget));
    }
    Monitor l = node(config, level + 1, depthLeft, budget);
    Monitor r = node(config, level + 1, depthLeft, budget);
    return Monitor::sum(std::move(l), std::move(r));
  }
  const std::size_t leaves = config.vars.empty() ? 3 : 4;
  switch (below(leaves)) {
    case 0: return Monitor::end();
    case 1: return Monitor::yes();
    case 2: return Monitor::no();
    default: return Monitor::var(config.vars[below(config.vars.size())]);
  }
}

Monitor TermGen::term(const GenConfig& config) {
  std::size_t budget = config.maxSize;
  return node(config, 0, config.maxDepth, budget);
}

Trace TermGen::trace(const std::vector<std::string>& actions, std::size_t maxLen) {
  Trace t(below(maxLen + 1));
  for (auto& a : t) a = actions[below(actions.size())];
  return t;
}

Substitution TermGen::closedSubstitution(const std::vector<std::string>& vars, const GenConfig& config) {
  GenConfig closed = config;
  closed.vars.clear();
  Substitution s;
  for (const auto& x : vars) s.set(x, term(closed));
  return s;
}

Monitor TermGen::rewriteAt(const Monitor& m, std::size_t target, std::size_t& index,
                           const std::function<Monitor(const Monitor&)>& f) {
  if (index++ == target) return f(m);
  switch (m.kind()) {
    case Kind::Prefix: return Monitor::prefix(m.name(), rewriteAt(m.body(), target, index, f));
    case Kind::Sum: {
      Monitor l = rewriteAt(m.left(), target, index, f);
      Monitor r = rewriteAt(m.right(), target, index, f);
      return Monitor::sum(std::move(l), std::move(r));
    }
    default: return m;
  }
}

std::vector<Monitor> subterms(const Monitor& m) {
  std::vector<Monitor> out;
  std::vector<Monitor> stack{m};
  while (!stack.empty()) {
    Monitor t = stack.back();
    stack.pop_back();
    out.push_back(t);
    if (t.kind() == Kind::Prefix) stack.push_back(t.body());
    if (t.kind() == Kind::Sum) {
      stack.push_back(t.right());
      stack.push_back(t.left());
    }
  }
  return out;
}

namespace {

bool isBoth(const Monitor& m) {
  if (m.kind() != Kind::Sum) return false;
  auto l = m.left().kind();
  auto r = m.right().kind();
  return (l == Kind::Yes && r == Kind::No) || (l == Kind::No && r == Kind::Yes);
}

}  // namespace

Monitor TermGen::scramble(const Monitor& m, const GenConfig& config, const ScrambleRules& rules) {
  Monitor cur = m;
  const auto& acts = config.actions;
  for (std::size_t round = 0; round < rules.rounds; ++round) {
    if (cur.size() > 4 * config.maxSize) break;
    const std::size_t target = below(cur.size());
    auto rewrite = [&](const Monitor& t) -> Monitor {
      std::vector<std::function<Monitor()>> options;
      options.push_back([&] { return Monitor::sum(t, Monitor::end()); });
      if (t.size() <= 6) options.push_back([&] { return Monitor::sum(t, t); });
      if (t.kind() == Kind::Sum) {
        options.push_back([&] { return Monitor::sum(t.right(), t.left()); });
        if (t.right().kind() == Kind::Sum)
          options.push_back([&] {
            return Monitor::sum(Monitor::sum(t.left(), t.right().left()), t.right().right());
          });
        if (t.left().kind() == Kind::Sum)
          options.push_back([&] {
            return Monitor::sum(t.left().left(), Monitor::sum(t.left().right(), t.right()));
          });
        if (t.left().kind() == Kind::Prefix && t.right().kind() == Kind::Prefix &&
            t.left().name() == t.right().name())
          options.push_back([&] {
            return Monitor::prefix(t.left().name(), Monitor::sum(t.left().body(), t.right().body()));
          });
      }
      if (t.kind() == Kind::Prefix && t.body().kind() == Kind::Sum)
        options.push_back([&] {
          return Monitor::sum(Monitor::prefix(t.name(), t.body().left()), Monitor::prefix(t.name(), t.body().right()));
        });
      if (t.kind() == Kind::End && !acts.empty())
        options.push_back([&] { return Monitor::prefix(acts[below(acts.size())], Monitor::end()); });
      if ((t.kind() == Kind::Yes || t.kind() == Kind::No) && !acts.empty()) {
        options.push_back([&] { return Monitor::sum(t, prefixSeq(trace(acts, 2), t)); });
        if (rules.omega)
          options.push_back([&] {
            Monitor fan = Monitor::end();
            bool first = true;
            for (const auto& a : acts) {
              Monitor s = Monitor::prefix(a, t);
              fan = first ? s : Monitor::sum(fan, s);
              first = false;
            }
            return fan;
          });
      }
      if (isBoth(t))
        options.push_back([&] {
          GenConfig small = config;
          small.maxSize = 4;
          small.maxDepth = 2;
          return Monitor::sum(t, term(small));
        });
      if (rules.unaryVars && t.kind() == Kind::Var && acts.size() == 1)
        options.push_back([&] { return Monitor::sum(t, Monitor::prefix(acts[0], t)); });
      return options[below(options.size())]();
    };
    std::size_t index = 0;
    cur = rewriteAt(cur, target, index, rewrite);
  }
  return cur;
}

Monitor TermGen::mutate(const Monitor& m, const GenConfig& config) {
  const std::size_t target = below(m.size());
  auto edit = [&](const Monitor& t) -> Monitor {
    GenConfig small = config;
    small.maxSize = 4;
    small.maxDepth = std::min<std::size_t>(config.maxDepth, 2);
    switch (t.kind()) {
      case Kind::End:
      case Kind::Yes:
      case Kind::No:
      case Kind::Var: {
        if (chance(0.3)) return Monitor::sum(t, term(small));
        return term(small);
      }
      case Kind::Prefix:
        if (chance(0.5) && !config.actions.empty())
          return Monitor::prefix(config.actions[below(config.actions.size())], t.body());
        return chance(0.5) ? t.body() : Monitor::sum(t, term(small));
      case Kind::Sum:
        if (chance(0.3)) return Monitor::sum(t, term(small));
        return chance(0.5) ? t.left() : t.right();
    }
    return t;
  };
  std::size_t index = 0;
  return rewriteAt(m, target, index, edit);
}

std::pair<Monitor, Monitor> TermGen::pair(const GenConfig& config, const ScrambleRules& rules) {
  Monitor m = term(config);
  Monitor n;
  const std::size_t pick = below(3);
  for (int attempt = 0; attempt < 8; ++attempt) {
    switch (pick) {
      case 0: n = term(config); break;
      case 1: n = scramble(m, config, rules); break;
      default: n = mutate(scramble(m, config, rules), config); break;
    }
    if (n.depth() <= config.maxDepth) break;
    n = term(config);
  }
  if (chance(0.5)) std::swap(m, n);
  return {m, n};
}

std::uint64_t trialSeed(std::uint64_t seed, std::uint64_t trial) {
  // splitmix64 finalizer over the combined value
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (trial + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::pair<Monitor, Monitor> shrinkPair(std::pair<Monitor, Monitor> failing,
                                       const std::function<bool(const Monitor&, const Monitor&)>& stillFails) {
  bool progress = true;
  while (progress) {
    progress = false;
    for (int side = 0; side < 2 && !progress; ++side) {
      Monitor& cur = side == 0 ? failing.first : failing.second;
      const std::size_t count = cur.size();
      for (std::size_t target = 0; target < count && !progress; ++target) {
        std::size_t probe = 0;
        const Monitor at = subterms(cur)[target];
        std::vector<Monitor> candidates{Monitor::end(), Monitor::yes(), Monitor::no()};
        if (at.kind() == Kind::Prefix) candidates.push_back(at.body());
        if (at.kind() == Kind::Sum) {
          candidates.push_back(at.left());
          candidates.push_back(at.right());
        }
        for (const auto& c : candidates) {
          if (c.size() >= at.size() && !(c.size() == at.size() && compare(c, at) < 0)) continue;
          if (c == at) continue;
          probe = 0;
          std::function<Monitor(const Monitor&, std::size_t&)> replace = [&](const Monitor& t, std::size_t& i) {
            if (i++ == target) return c;
            switch (t.kind()) {
              case Kind::Prefix: return Monitor::prefix(t.name(), replace(t.body(), i));
              case Kind::Sum: {
                Monitor l = replace(t.left(), i);
                Monitor r = replace(t.right(), i);
                return Monitor::sum(std::move(l), std::move(r));
              }
              default: return t;
            }
          };
          Monitor next = replace(cur, probe);
          bool fails = side == 0 ? stillFails(next, failing.second) : stillFails(failing.first, next);
          if (fails) {
            cur = next;
            progress = true;
            break;
          }
        }
      }
    }
  }
  return failing;
}

}  // namespace monalg
