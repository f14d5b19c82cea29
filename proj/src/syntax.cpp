// SPDX-License-Identifier: Apache-2.0
#include "monalg/syntax.hpp"

#include <algorithm>
#include <cctype>

namespace monalg {

std::string_view toString(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::UnexpectedToken: return "UnexpectedToken";
    case ParseErrorKind::ReservedWordAsAction: return "ReservedWordAsAction";
    case ParseErrorKind::UnbalancedParen: return "UnbalancedParen";
    case ParseErrorKind::EmptyInput: return "EmptyInput";
  }
  return "?";
}

namespace {
std::string formatError(ParseErrorKind kind, const SourceSpan& span, const std::string& message) {
  return std::to_string(span.line) + ":" + std::to_string(span.column) + ": " +
         std::string(toString(kind)) + ": " + message;
}
}  // namespace

ParseError::ParseError(ParseErrorKind kind, SourceSpan span, const std::string& message)
    : Error(formatError(kind, span, message)), kind_(kind), span_(span), detail_(message) {}

bool TermContext::isAction(std::string_view ident) const {
  if (isReservedWord(ident)) return false;
  if (alphabet.isFinite()) return alphabet.contains(ident);
  return vars.count(std::string(ident)) == 0;
}

std::vector<Token> tokenize(std::string_view text, std::size_t baseOffset, std::size_t baseLine) {
  std::vector<Token> out;
  std::size_t line = baseLine;
  std::size_t lineStart = 0;
  std::size_t i = 0;
  auto spanAt = [&](std::size_t pos, std::size_t len) {
    return SourceSpan{line, pos - lineStart + 1, baseOffset + pos, len};
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      lineStart = ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
        ++i;
      out.push_back({TokenKind::Ident, std::string(text.substr(start, i - start)),
                     spanAt(start, i - start)});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      out.push_back({TokenKind::Number, std::string(text.substr(start, i - start)),
                     spanAt(start, i - start)});
      continue;
    }
    auto two = text.substr(i, 2);
    if (two == "->" || two == ":=") {
      out.push_back({two == "->" ? TokenKind::Arrow : TokenKind::Define, std::string(two),
                     spanAt(start, 2)});
      i += 2;
      continue;
    }
    TokenKind kind;
    switch (c) {
      case '.': kind = TokenKind::Dot; break;
      case '+': kind = TokenKind::Plus; break;
      case '(': kind = TokenKind::LParen; break;
      case ')': kind = TokenKind::RParen; break;
      case '=': kind = TokenKind::Equals; break;
      case ',': kind = TokenKind::Comma; break;
      case ':': kind = TokenKind::Colon; break;
      case ';': kind = TokenKind::Semicolon; break;
      case '{': kind = TokenKind::LBrace; break;
      case '}': kind = TokenKind::RBrace; break;
      default:
        throw ParseError(ParseErrorKind::UnexpectedToken, spanAt(start, 1),
                         std::string("unexpected character '") + c + "'");
    }
    out.push_back({kind, std::string(1, c), spanAt(start, 1)});
    ++i;
  }
  out.push_back({TokenKind::End, "", spanAt(text.size(), 0)});
  return out;
}

const Token& TokenCursor::peek(std::size_t ahead) const {
  std::size_t idx = std::min(pos_ + ahead, tokens_.size() - 1);
  return tokens_[idx];
}

const Token& TokenCursor::next() {
  const Token& t = tokens_[pos_];
  if (pos_ + 1 < tokens_.size()) ++pos_;
  return t;
}

bool TokenCursor::accept(TokenKind kind) {
  if (peek().kind != kind) return false;
  next();
  return true;
}

bool TokenCursor::acceptWord(std::string_view word) {
  if (peek().kind != TokenKind::Ident || peek().text != word) return false;
  next();
  return true;
}

const Token& TokenCursor::expect(TokenKind kind, std::string_view what) {
  if (peek().kind != kind) fail(peek(), "expected " + std::string(what));
  return next();
}

void TokenCursor::expectWord(std::string_view word) {
  if (!acceptWord(word)) fail(peek(), "expected '" + std::string(word) + "'");
}

void TokenCursor::fail(const Token& at, const std::string& message) const {
  std::string found = at.kind == TokenKind::End ? "end of input" : "'" + at.text + "'";
  throw ParseError(ParseErrorKind::UnexpectedToken, at.span, message + ", found " + found);
}

namespace {

Monitor parseSum(TokenCursor& c, const TermContext& ctx);

Monitor parseAtom(TokenCursor& c, const TermContext& ctx) {
  const Token& t = c.peek();
  switch (t.kind) {
    case TokenKind::Ident: {
      Token tok = c.next();
      Monitor m;
      if (tok.text == "yes") m = Monitor::yes();
      else if (tok.text == "no") m = Monitor::no();
      else if (tok.text == "end") m = Monitor::end();
      else m = Monitor::var(tok.text);
      if (c.peek().kind == TokenKind::Dot) {
        std::string why = isReservedWord(tok.text)
                              ? "'" + tok.text + "' is a verdict, not an action"
                              : "'" + tok.text + "' is not an action of the alphabet";
        throw ParseError(ParseErrorKind::UnexpectedToken, tok.span, why);
      }
      return m;
    }
    case TokenKind::LParen: {
      Token open = c.next();
      Monitor m = parseSum(c, ctx);
      if (!c.accept(TokenKind::RParen))
        throw ParseError(ParseErrorKind::UnbalancedParen, open.span, "'(' is never closed");
      return m;
    }
    case TokenKind::RParen:
      throw ParseError(ParseErrorKind::UnbalancedParen, t.span, "')' without matching '('");
    default: c.fail(t, "expected a monitor");
  }
}

Monitor parsePrefix(TokenCursor& c, const TermContext& ctx) {
  const Token& t = c.peek();
  if (t.kind == TokenKind::Ident && ctx.isAction(t.text)) {
    Token action = c.next();
    if (c.peek().kind != TokenKind::Dot)
      throw ParseError(ParseErrorKind::UnexpectedToken, action.span,
                       "action '" + action.text + "' must be followed by '.'");
    c.next();
    return Monitor::prefix(action.text, parsePrefix(c, ctx));
  }
  return parseAtom(c, ctx);
}

Monitor parseSum(TokenCursor& c, const TermContext& ctx) {
  Monitor m = parsePrefix(c, ctx);
  while (c.accept(TokenKind::Plus)) m = Monitor::sum(m, parsePrefix(c, ctx));
  return m;
}

void expectEnd(TokenCursor& c) {
  const Token& t = c.peek();
  if (t.kind == TokenKind::End) return;
  if (t.kind == TokenKind::RParen)
    throw ParseError(ParseErrorKind::UnbalancedParen, t.span, "')' without matching '('");
  c.fail(t, "expected end of input");
}

TokenCursor cursorFor(std::string_view text) {
  TokenCursor c(tokenize(text));
  if (c.atEnd()) throw ParseError(ParseErrorKind::EmptyInput, c.peek().span, "empty input");
  return c;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Monitor parseMonitorAt(TokenCursor& cursor, const TermContext& ctx) { return parseSum(cursor, ctx); }

Monitor parseMonitor(std::string_view text, const TermContext& ctx) {
  TokenCursor c = cursorFor(text);
  Monitor m = parseSum(c, ctx);
  expectEnd(c);
  return m;
}

Monitor parseMonitor(std::string_view text, const Alphabet& alphabet) {
  return parseMonitor(text, TermContext{alphabet, {}});
}

Equation parseEquation(std::string_view text, const TermContext& ctx) {
  TokenCursor c = cursorFor(text);
  Monitor lhs = parseSum(c, ctx);
  if (c.peek().kind == TokenKind::RParen)
    throw ParseError(ParseErrorKind::UnbalancedParen, c.peek().span, "')' without matching '('");
  c.expect(TokenKind::Equals, "'='");
  Monitor rhs = parseSum(c, ctx);
  expectEnd(c);
  return {lhs, rhs};
}

Equation parseEquation(std::string_view text, const Alphabet& alphabet) {
  return parseEquation(text, TermContext{alphabet, {}});
}

Alphabet parseAlphabet(std::string_view text) {
  std::string_view body = trim(text);
  std::size_t lead = static_cast<std::size_t>(body.data() - text.data());
  if (body.empty()) throw ParseError(ParseErrorKind::EmptyInput, SourceSpan{1, 1, 0, 0}, "empty alphabet");
  if (body == "infinite") return Alphabet::openEnded();
  std::vector<std::string> actions;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t comma = body.find(',', pos);
    if (comma == std::string_view::npos) comma = body.size();
    std::string_view raw = body.substr(pos, comma - pos);
    std::string_view item = trim(raw);
    std::size_t at = lead + pos + static_cast<std::size_t>(item.data() - raw.data());
    SourceSpan span{1, at + 1, at, item.size()};
    if (isReservedWord(item))
      throw ParseError(ParseErrorKind::ReservedWordAsAction, span,
                       "'" + std::string(item) + "' is reserved and cannot be an action");
    if (!isIdentifier(item))
      throw ParseError(ParseErrorKind::UnexpectedToken, span,
                       "'" + std::string(item) + "' is not a valid action name");
    if (std::find(actions.begin(), actions.end(), item) != actions.end())
      throw ParseError(ParseErrorKind::UnexpectedToken, span,
                       "duplicate action '" + std::string(item) + "'");
    actions.emplace_back(item);
    pos = comma + 1;
  }
  return Alphabet::finite(std::move(actions));
}

Substitution parseSubstitution(std::string_view text, const TermContext& ctx) {
  MonitorFile file = parseMonitorFile(text, ctx.alphabet, ctx.vars);
  if (!file.terms.empty() || !file.equations.empty() || !file.definitions.empty())
    throw ParseError(ParseErrorKind::UnexpectedToken, SourceSpan{},
                     "substitution files may only contain 'x -> term' lines");
  return file.substitution;
}

Trace parseTrace(std::string_view text) {
  std::string_view body = trim(text);
  Trace out;
  if (body.empty() || body == "<eps>") return out;
  std::string cur;
  auto flush = [&]() {
    if (cur.empty()) return;
    if (!isIdentifier(cur) || isReservedWord(cur))
      throw ParseError(ParseErrorKind::UnexpectedToken, SourceSpan{}, "bad action '" + cur + "' in trace");
    out.push_back(cur);
    cur.clear();
  };
  for (char c : body) {
    if (c == ' ' || c == '.' || c == '\t') flush();
    else cur.push_back(c);
  }
  flush();
  return out;
}

namespace {
void print(const Monitor& m, std::string& out) {
  switch (m.kind()) {
    case Kind::End: out += "end"; return;
    case Kind::Yes: out += "yes"; return;
    case Kind::No: out += "no"; return;
    case Kind::Var: out += m.name(); return;
    case Kind::Prefix:
      out += m.name();
      out += '.';
      if (m.body().kind() == Kind::Sum) {
        out += '(';
        print(m.body(), out);
        out += ')';
      } else {
        print(m.body(), out);
      }
      return;
    case Kind::Sum:
      print(m.left(), out);
      out += " + ";
      if (m.right().kind() == Kind::Sum) {
        out += '(';
        print(m.right(), out);
        out += ')';
      } else {
        print(m.right(), out);
      }
      return;
  }
}
}  // namespace

std::string printMonitor(const Monitor& m) {
  std::string out;
  print(m, out);
  return out;
}

std::string printEquation(const Equation& eq) {
  return printMonitor(eq.lhs) + " = " + printMonitor(eq.rhs);
}

std::string printSubstitution(const Substitution& sigma) {
  std::string out;
  for (const auto& [var, image] : sigma.mapping()) {
    if (!out.empty()) out += ", ";
    out += var + " -> " + printMonitor(image);
  }
  return out.empty() ? "identity" : out;
}

std::string printTrace(const Trace& t) {
  if (t.empty()) return "<eps>";
  std::string out;
  for (const auto& a : t) {
    if (!out.empty()) out += ' ';
    out += a;
  }
  return out;
}

MonitorFile parseMonitorFile(std::string_view text, const std::optional<Alphabet>& fallback,
                             const std::set<std::string>& extraVars) {
  MonitorFile file;
  file.vars = extraVars;
  std::size_t offset = 0;
  std::size_t lineNo = 1;
  while (offset <= text.size()) {
    std::size_t nl = text.find('\n', offset);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(offset, nl - offset);
    std::string_view content = line.substr(0, std::min(line.find('#'), line.size()));
    std::string_view stripped = trim(content);
    auto lineSpan = [&]() { return SourceSpan{lineNo, 1, offset, line.size()}; };

    if (!stripped.empty()) {
      if (stripped.rfind("alphabet:", 0) == 0) {
        try {
          file.alphabet = parseAlphabet(stripped.substr(9));
        } catch (const ParseError& e) {
          SourceSpan s = e.span();
          std::size_t col = static_cast<std::size_t>(stripped.data() - line.data()) + 9 + s.offset;
          throw ParseError(e.kind(), SourceSpan{lineNo, col + 1, offset + col, s.length}, e.detail());
        }
      } else if (stripped.rfind("vars:", 0) == 0) {
        std::string_view rest = stripped.substr(5);
        std::size_t pos = 0;
        while (pos <= rest.size()) {
          std::size_t comma = std::min(rest.find(',', pos), rest.size());
          std::string_view item = trim(rest.substr(pos, comma - pos));
          if (!item.empty()) {
            if (!isIdentifier(item) || isReservedWord(item))
              throw ParseError(ParseErrorKind::UnexpectedToken, lineSpan(),
                               "bad variable name '" + std::string(item) + "'");
            file.vars.insert(std::string(item));
          }
          pos = comma + 1;
        }
      } else {
        if (!file.alphabet && !fallback)
          throw ParseError(ParseErrorKind::UnexpectedToken, lineSpan(),
                           "no alphabet: add an 'alphabet:' header or pass one explicitly");
        TermContext ctx{file.alphabet ? *file.alphabet : *fallback, file.vars};
        TokenCursor c(tokenize(content, offset, lineNo));
        if (c.peek().kind == TokenKind::Ident && c.peek(1).kind == TokenKind::Define) {
          std::string name = c.next().text;
          c.next();
          Monitor m = parseMonitorAt(c, ctx);
          expectEnd(c);
          file.definitions.emplace_back(name, m);
        } else if (c.peek().kind == TokenKind::Ident && c.peek(1).kind == TokenKind::Arrow) {
          const Token& v = c.next();
          if (ctx.isAction(v.text) || isReservedWord(v.text))
            throw ParseError(ParseErrorKind::UnexpectedToken, v.span,
                             "'" + v.text + "' is not a variable");
          std::string name = v.text;
          c.next();
          Monitor m = parseMonitorAt(c, ctx);
          expectEnd(c);
          file.substitution.set(name, m);
        } else {
          Monitor lhs = parseMonitorAt(c, ctx);
          if (c.accept(TokenKind::Equals)) {
            Monitor rhs = parseMonitorAt(c, ctx);
            expectEnd(c);
            file.equations.push_back({lhs, rhs});
          } else {
            expectEnd(c);
            file.terms.push_back(lhs);
          }
        }
      }
    }
    if (nl == text.size()) break;
    offset = nl + 1;
    ++lineNo;
  }
  return file;
}

}  // namespace monalg
