// SPDX-License-Identifier: Apache-2.0
//
// Concrete syntax for monitors, equations, alphabets and substitutions.
//
//   sum    ::= prefix ('+' prefix)*          left-associated
//   prefix ::= ACTION '.' prefix | atom      right-associated
//   atom   ::= 'yes' | 'no' | 'end' | VAR | '(' sum ')'
//
// Whether an identifier is an action or a variable is decided by the
// alphabet: with a finite alphabet its members are actions and every other
// identifier is a variable; with the open-ended alphabet the declared
// variable set decides and everything else is an action.
#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "monalg/term.hpp"

namespace monalg {

struct SourceSpan {
  std::size_t line = 1;    // 1-based
  std::size_t column = 1;  // 1-based
  std::size_t offset = 0;  // byte offset into the input
  std::size_t length = 0;
};

enum class ParseErrorKind { UnexpectedToken, ReservedWordAsAction, UnbalancedParen, EmptyInput };

std::string_view toString(ParseErrorKind kind);

class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, SourceSpan span, const std::string& message);
  ParseErrorKind kind() const { return kind_; }
  const SourceSpan& span() const { return span_; }
  const std::string& detail() const { return detail_; }

 private:
  ParseErrorKind kind_;
  SourceSpan span_;
  std::string detail_;
};

struct TermContext {
  Alphabet alphabet = Alphabet::openEnded();
  std::set<std::string> vars;  // consulted only for the open-ended alphabet

  bool isAction(std::string_view ident) const;
};

enum class TokenKind {
  Ident, Number, Dot, Plus, LParen, RParen, Equals, Comma, Colon, Semicolon,
  Arrow, Define, LBrace, RBrace, End
};

struct Token {
  TokenKind kind;
  std::string text;
  SourceSpan span;
};

// Tokenizer shared by every textual format. '#' starts a comment that runs
// to the end of the line.
std::vector<Token> tokenize(std::string_view text, std::size_t baseOffset = 0,
                            std::size_t baseLine = 1);

// Cursor over a token vector with helpers for recursive descent.
class TokenCursor {
 public:
  explicit TokenCursor(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  const Token& peek(std::size_t ahead = 0) const;
  const Token& next();
  bool accept(TokenKind kind);
  bool acceptWord(std::string_view word);
  const Token& expect(TokenKind kind, std::string_view what);
  void expectWord(std::string_view word);
  bool atEnd() const { return peek().kind == TokenKind::End; }
  [[noreturn]] void fail(const Token& at, const std::string& message) const;

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// Parses one monitor at the cursor and leaves the cursor after it.
Monitor parseMonitorAt(TokenCursor& cursor, const TermContext& ctx);

Monitor parseMonitor(std::string_view text, const Alphabet& alphabet);
Monitor parseMonitor(std::string_view text, const TermContext& ctx);
Equation parseEquation(std::string_view text, const Alphabet& alphabet);
Equation parseEquation(std::string_view text, const TermContext& ctx);
// "infinite" or a comma-separated identifier list.
Alphabet parseAlphabet(std::string_view text);
// One "x -> term" per line.
Substitution parseSubstitution(std::string_view text, const TermContext& ctx);
// "a b c" with "<eps>" for the empty trace; also accepts "a.b.c".
Trace parseTrace(std::string_view text);

std::string printMonitor(const Monitor& m);
std::string printEquation(const Equation& eq);
std::string printSubstitution(const Substitution& sigma);
std::string printTrace(const Trace& t);  // "a b" or "<eps>"

// Contents of a monitor file: optional "alphabet:" and "vars:" headers,
// "name := term" definitions, "x -> term" substitution lines, "lhs = rhs"
// equations and bare terms, one per line.
struct MonitorFile {
  std::optional<Alphabet> alphabet;
  std::set<std::string> vars;
  std::vector<std::pair<std::string, Monitor>> definitions;
  std::vector<Monitor> terms;
  std::vector<Equation> equations;
  Substitution substitution;
};

// `fallback` is used when the file has no alphabet header.
MonitorFile parseMonitorFile(std::string_view text, const std::optional<Alphabet>& fallback,
                             const std::set<std::string>& extraVars = {});

}  // namespace monalg
