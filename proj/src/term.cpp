// SPDX-License-Identifier: Apache-2.0
#include "monalg/term.hpp"

#include <algorithm>
#include <functional>

namespace monalg {

struct Monitor::Node {
  Kind kind;
  std::string name;
  Monitor a;
  Monitor b;
  std::size_t hash = 0;
  std::size_t depth = 0;
  std::size_t size = 1;

  Node(Kind k, std::string n) : kind(k), name(std::move(n)), a(nullptr), b(nullptr) {}
  Node(Kind k, std::string n, Monitor x, Monitor y)
      : kind(k), name(std::move(n)), a(std::move(x)), b(std::move(y)) {}
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::shared_ptr<const Monitor::Node> makeLeaf(Kind k) {
  auto n = std::make_shared<Monitor::Node>(k, std::string{});
  n->hash = mix(0, static_cast<std::size_t>(k) + 1);
  return n;
}

const std::shared_ptr<const Monitor::Node>& leaf(Kind k) {
  static const auto endNode = makeLeaf(Kind::End);
  static const auto yesNode = makeLeaf(Kind::Yes);
  static const auto noNode = makeLeaf(Kind::No);
  switch (k) {
    case Kind::Yes: return yesNode;
    case Kind::No: return noNode;
    default: return endNode;
  }
}

}  // namespace

Monitor::Monitor() : node_(leaf(Kind::End)) {}

Monitor Monitor::end() { return Monitor(leaf(Kind::End)); }
Monitor Monitor::yes() { return Monitor(leaf(Kind::Yes)); }
Monitor Monitor::no() { return Monitor(leaf(Kind::No)); }

Monitor Monitor::var(std::string name) {
  auto n = std::make_shared<Node>(Kind::Var, std::move(name));
  n->hash = mix(std::hash<std::string>{}(n->name), 7);
  return Monitor(std::move(n));
}

Monitor Monitor::prefix(std::string action, Monitor body) {
  auto n = std::make_shared<Node>(Kind::Prefix, std::move(action), std::move(body), Monitor());
  n->hash = mix(mix(std::hash<std::string>{}(n->name), 11), n->a.hash());
  n->depth = 1 + n->a.depth();
  n->size = 1 + n->a.size();
  return Monitor(std::move(n));
}

Monitor Monitor::sum(Monitor left, Monitor right) {
  auto n = std::make_shared<Node>(Kind::Sum, std::string{}, std::move(left), std::move(right));
  n->hash = mix(mix(13, n->a.hash()), n->b.hash());
  n->depth = std::max(n->a.depth(), n->b.depth());
  n->size = 1 + n->a.size() + n->b.size();
  return Monitor(std::move(n));
}

Kind Monitor::kind() const { return node_->kind; }
bool Monitor::isVerdict() const {
  return node_->kind == Kind::End || node_->kind == Kind::Yes || node_->kind == Kind::No;
}
const std::string& Monitor::name() const { return node_->name; }
const Monitor& Monitor::body() const { return node_->a; }
const Monitor& Monitor::left() const { return node_->a; }
const Monitor& Monitor::right() const { return node_->b; }
std::size_t Monitor::hash() const { return node_->hash; }
std::size_t Monitor::depth() const { return node_->depth; }
std::size_t Monitor::size() const { return node_->size; }

bool operator==(const Monitor& x, const Monitor& y) {
  if (x.node_ == y.node_) return true;
  if (x.node_->hash != y.node_->hash || x.node_->kind != y.node_->kind ||
      x.node_->size != y.node_->size)
    return false;
  switch (x.kind()) {
    case Kind::End:
    case Kind::Yes:
    case Kind::No: return true;
    case Kind::Var: return x.name() == y.name();
    case Kind::Prefix: return x.name() == y.name() && x.body() == y.body();
    case Kind::Sum: return x.left() == y.left() && x.right() == y.right();
  }
  return false;
}

namespace {
int rank(Kind k) {
  switch (k) {
    case Kind::Yes: return 0;
    case Kind::No: return 1;
    case Kind::Prefix: return 2;
    case Kind::Var: return 3;
    case Kind::Sum: return 4;
    case Kind::End: return 5;
  }
  return 6;
}
}  // namespace

std::strong_ordering compare(const Monitor& a, const Monitor& b) {
  if (a.sameNode(b)) return std::strong_ordering::equal;
  if (auto c = rank(a.kind()) <=> rank(b.kind()); c != 0) return c;
  switch (a.kind()) {
    case Kind::Var: return a.name().compare(b.name()) <=> 0;
    case Kind::Prefix:
      if (auto c = a.name().compare(b.name()) <=> 0; c != 0) return c;
      return compare(a.body(), b.body());
    case Kind::Sum:
      if (auto c = compare(a.left(), b.left()); c != 0) return c;
      return compare(a.right(), b.right());
    default: return std::strong_ordering::equal;
  }
}

bool isReservedWord(std::string_view word) {
  return word == "yes" || word == "no" || word == "end";
}

bool isIdentifier(std::string_view word) {
  if (word.empty()) return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(word.front())) return false;
  return std::all_of(word.begin(), word.end(), [&](char c) { return alpha(c) || digit(c); });
}

Alphabet Alphabet::finite(std::vector<std::string> actions) {
  if (actions.empty()) throw Error("a finite alphabet needs at least one action");
  for (const auto& a : actions) {
    if (isReservedWord(a)) throw Error("reserved word '" + a + "' cannot be an action");
    if (!isIdentifier(a)) throw Error("'" + a + "' is not a valid action name");
  }
  std::sort(actions.begin(), actions.end());
  if (std::adjacent_find(actions.begin(), actions.end()) != actions.end())
    throw Error("duplicate action in alphabet");
  return Alphabet(true, std::move(actions));
}

Alphabet Alphabet::openEnded() { return Alphabet(false, {}); }

bool Alphabet::contains(std::string_view action) const {
  if (!finite_) return isIdentifier(action) && !isReservedWord(action);
  return std::binary_search(actions_.begin(), actions_.end(), action);
}

std::string toString(const Alphabet& alphabet) {
  if (!alphabet.isFinite()) return "infinite";
  std::string out;
  for (const auto& a : alphabet.actions()) {
    if (!out.empty()) out += ",";
    out += a;
  }
  return out;
}

const Monitor* Substitution::find(const std::string& var) const {
  auto it = mapping_.find(var);
  return it == mapping_.end() ? nullptr : &it->second;
}

bool Substitution::isClosed() const {
  return std::all_of(mapping_.begin(), mapping_.end(),
                     [](const auto& kv) { return monalg::isClosed(kv.second); });
}

std::size_t depth(const Monitor& m) { return m.depth(); }
std::size_t sizeOf(const Monitor& m) { return m.size(); }

namespace {
void collect(const Monitor& m, Kind want, std::set<std::string>& out) {
  switch (m.kind()) {
    case Kind::Var:
      if (want == Kind::Var) out.insert(m.name());
      break;
    case Kind::Prefix:
      if (want == Kind::Prefix) out.insert(m.name());
      collect(m.body(), want, out);
      break;
    case Kind::Sum:
      collect(m.left(), want, out);
      collect(m.right(), want, out);
      break;
    default: break;
  }
}
}  // namespace

std::set<std::string> varsOf(const Monitor& m) {
  std::set<std::string> out;
  collect(m, Kind::Var, out);
  return out;
}

std::set<std::string> actionsOf(const Monitor& m) {
  std::set<std::string> out;
  collect(m, Kind::Prefix, out);
  return out;
}

bool isClosed(const Monitor& m) {
  switch (m.kind()) {
    case Kind::Var: return false;
    case Kind::Prefix: return isClosed(m.body());
    case Kind::Sum: return isClosed(m.left()) && isClosed(m.right());
    default: return true;
  }
}

Monitor applySubst(const Substitution& sigma, const Monitor& m) {
  switch (m.kind()) {
    case Kind::Var: {
      const Monitor* image = sigma.find(m.name());
      return image ? *image : m;
    }
    case Kind::Prefix: {
      Monitor b = applySubst(sigma, m.body());
      return b.sameNode(m.body()) ? m : Monitor::prefix(m.name(), std::move(b));
    }
    case Kind::Sum: {
      Monitor l = applySubst(sigma, m.left());
      Monitor r = applySubst(sigma, m.right());
      if (l.sameNode(m.left()) && r.sameNode(m.right())) return m;
      return Monitor::sum(std::move(l), std::move(r));
    }
    default: return m;
  }
}

Equation applySubst(const Substitution& sigma, const Equation& eq) {
  return {applySubst(sigma, eq.lhs), applySubst(sigma, eq.rhs)};
}

namespace {
void flatten(const Monitor& m, std::vector<Monitor>& out) {
  if (m.kind() == Kind::Sum) {
    flatten(m.left(), out);
    flatten(m.right(), out);
  } else if (m.kind() != Kind::End) {
    out.push_back(m);
  }
}

void sortUnique(std::vector<Monitor>& v) {
  std::sort(v.begin(), v.end(), MonitorLess{});
  v.erase(std::unique(v.begin(), v.end()), v.end());
}
}  // namespace

SumForm toSumForm(const Monitor& m) {
  SumForm sf;
  flatten(m, sf.summands);
  sortUnique(sf.summands);
  return sf;
}

Monitor sumOf(const std::vector<Monitor>& summands) {
  if (summands.empty()) return Monitor::end();
  Monitor acc = summands.front();
  for (std::size_t i = 1; i < summands.size(); ++i) acc = Monitor::sum(acc, summands[i]);
  return acc;
}

Monitor fromSumForm(const SumForm& sf) { return sumOf(sf.summands); }

Monitor acCanon(const Monitor& m) {
  switch (m.kind()) {
    case Kind::Prefix: {
      Monitor b = acCanon(m.body());
      return b.sameNode(m.body()) ? m : Monitor::prefix(m.name(), std::move(b));
    }
    case Kind::Sum: {
      std::vector<Monitor> parts;
      flatten(m, parts);
      for (auto& p : parts) p = acCanon(p);
      sortUnique(parts);
      return sumOf(parts);
    }
    default: return m;
  }
}

bool acEqual(const Monitor& m, const Monitor& n) { return acCanon(m) == acCanon(n); }

Monitor prefixSeq(const Trace& s, const Monitor& m) {
  Monitor acc = m;
  for (auto it = s.rbegin(); it != s.rend(); ++it) acc = Monitor::prefix(*it, acc);
  return acc;
}

}  // namespace monalg
