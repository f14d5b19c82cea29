// SPDX-License-Identifier: Apache-2.0
//
// Monitor terms: the six constructors, structural metrics, substitution and
// the AC-canonical view of sums.
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace monalg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an operation that only makes sense for closed terms sees a variable.
class NonClosedInput : public Error {
 public:
  using Error::Error;
};

enum class Kind : std::uint8_t { End, Yes, No, Prefix, Sum, Var };

bool isReservedWord(std::string_view word);
bool isIdentifier(std::string_view word);

// Immutable, shared term. Copies are cheap; equality is structural.
class Monitor {
 public:
  Monitor();  // end

  static Monitor end();
  static Monitor yes();
  static Monitor no();
  static Monitor var(std::string name);
  static Monitor prefix(std::string action, Monitor body);
  static Monitor sum(Monitor left, Monitor right);

  Kind kind() const;
  bool isVerdict() const;  // end, yes or no
  // Action of a prefix, or name of a variable.
  const std::string& name() const;
  const Monitor& body() const;
  const Monitor& left() const;
  const Monitor& right() const;

  std::size_t hash() const;
  std::size_t depth() const;
  std::size_t size() const;

  bool sameNode(const Monitor& other) const { return node_ == other.node_; }

  friend bool operator==(const Monitor& a, const Monitor& b);
  friend bool operator!=(const Monitor& a, const Monitor& b) { return !(a == b); }

  struct Node;  // defined in term.cpp

 private:
  explicit Monitor(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Total order used for canonical summand ordering: yes < no < prefixes (by
// action, then body) < variables (by name); sums and end sort last.
std::strong_ordering compare(const Monitor& a, const Monitor& b);

struct MonitorLess {
  bool operator()(const Monitor& a, const Monitor& b) const { return compare(a, b) < 0; }
};

struct MonitorHash {
  std::size_t operator()(const Monitor& m) const { return m.hash(); }
};

using Trace = std::vector<std::string>;

class Alphabet {
 public:
  // Throws Error on an empty list, duplicates, reserved words or bad identifiers.
  static Alphabet finite(std::vector<std::string> actions);
  static Alphabet openEnded();

  bool isFinite() const { return finite_; }
  bool contains(std::string_view action) const;
  // Sorted action names; empty for the open-ended alphabet.
  const std::vector<std::string>& actions() const { return actions_; }
  std::size_t size() const { return actions_.size(); }

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.finite_ == b.finite_ && a.actions_ == b.actions_;
  }

 private:
  Alphabet(bool finite, std::vector<std::string> actions)
      : finite_(finite), actions_(std::move(actions)) {}
  bool finite_;
  std::vector<std::string> actions_;
};

std::string toString(const Alphabet& alphabet);

struct Equation {
  Monitor lhs;
  Monitor rhs;
  friend bool operator==(const Equation& a, const Equation& b) {
    return a.lhs == b.lhs && a.rhs == b.rhs;
  }
};

// Variable -> term map; unmapped variables are left in place.
class Substitution {
 public:
  Substitution() = default;
  explicit Substitution(std::map<std::string, Monitor> mapping) : mapping_(std::move(mapping)) {}

  void set(const std::string& var, Monitor image) { mapping_.insert_or_assign(var, std::move(image)); }
  const Monitor* find(const std::string& var) const;
  const std::map<std::string, Monitor>& mapping() const { return mapping_; }
  bool empty() const { return mapping_.empty(); }
  bool isClosed() const;

  friend bool operator==(const Substitution& a, const Substitution& b) {
    return a.mapping_ == b.mapping_;
  }

 private:
  std::map<std::string, Monitor> mapping_;
};

std::size_t depth(const Monitor& m);
std::size_t sizeOf(const Monitor& m);
std::set<std::string> varsOf(const Monitor& m);
std::set<std::string> actionsOf(const Monitor& m);
bool isClosed(const Monitor& m);

Monitor applySubst(const Substitution& sigma, const Monitor& m);
Equation applySubst(const Substitution& sigma, const Equation& eq);

// Top-level summands with sums flattened, end dropped, duplicates removed and
// sorted canonically. An empty summand list denotes end.
struct SumForm {
  std::vector<Monitor> summands;
  friend bool operator==(const SumForm& a, const SumForm& b) { return a.summands == b.summands; }
};

SumForm toSumForm(const Monitor& m);
// Left-associated sum of the summands in order; end when empty.
Monitor fromSumForm(const SumForm& sf);
Monitor sumOf(const std::vector<Monitor>& summands);

// Representative of m modulo A1-A4 applied hereditarily: every sum is
// flattened, deduplicated, sorted and re-associated to the left.
Monitor acCanon(const Monitor& m);
bool acEqual(const Monitor& m, const Monitor& n);

// s.m: the prefix chain along s ending in m.
Monitor prefixSeq(const Trace& s, const Monitor& m);

}  // namespace monalg
