#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "argstrength/argument.hpp"
#include "argstrength/formula.hpp"
#include "argstrength/rational.hpp"

namespace argstrength {

// 1-based position of a token inside the parsed document.
struct SourceSpan {
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t length = 0;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, SourceSpan span)
      : std::runtime_error(std::to_string(span.line) + ":" +
                           std::to_string(span.column) + ": " + message),
        message_(message),
        span_(span) {}

  const std::string& message() const { return message_; }
  SourceSpan span() const { return span_; }

 private:
  std::string message_;
  SourceSpan span_;
};

namespace detail {

enum class TokenKind {
  Ident, Number, LParen, RParen, Comma, LBracket, RBracket, Equals, Bar, Arrow, End
};

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  Rational number;
  SourceSpan span;
};

inline bool ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
inline bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }
inline bool digit(char c) { return c >= '0' && c <= '9'; }

// Tokenize one directive payload. `line` and `column0` locate the payload
// inside the whole document so every token carries an absolute span.
inline std::vector<Token> tokenize(std::string_view payload, std::size_t line,
                                   std::size_t column0) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto span_at = [&](std::size_t start, std::size_t len) {
    return SourceSpan{line, column0 + start, len};
  };
  while (i < payload.size()) {
    const char c = payload[i];
    if (c == ' ' || c == '\t') { ++i; continue; }
    const std::size_t start = i;
    if (ident_start(c)) {
      while (i < payload.size() && ident_char(payload[i])) ++i;
      out.push_back({TokenKind::Ident, std::string(payload.substr(start, i - start)),
                     Rational(0), span_at(start, i - start)});
      continue;
    }
    if (digit(c) || (c == '.' && i + 1 < payload.size() && digit(payload[i + 1]))) {
      while (i < payload.size() && digit(payload[i])) ++i;
      if (i < payload.size() && payload[i] == '.') {
        ++i;
        while (i < payload.size() && digit(payload[i])) ++i;
      } else if (i < payload.size() && payload[i] == '/' && i + 1 < payload.size() &&
                 digit(payload[i + 1])) {
        ++i;
        while (i < payload.size() && digit(payload[i])) ++i;
      }
      const std::string text(payload.substr(start, i - start));
      const auto value = Rational::parse(text);
      if (!value) {
        throw ParseError("malformed number '" + text + "'", span_at(start, i - start));
      }
      out.push_back({TokenKind::Number, text, *value, span_at(start, i - start)});
      continue;
    }
    switch (c) {
      case '(': out.push_back({TokenKind::LParen, "(", Rational(0), span_at(start, 1)}); ++i; break;
      case ')': out.push_back({TokenKind::RParen, ")", Rational(0), span_at(start, 1)}); ++i; break;
      case ',': out.push_back({TokenKind::Comma, ",", Rational(0), span_at(start, 1)}); ++i; break;
      case '[': out.push_back({TokenKind::LBracket, "[", Rational(0), span_at(start, 1)}); ++i; break;
      case ']': out.push_back({TokenKind::RBracket, "]", Rational(0), span_at(start, 1)}); ++i; break;
      case '=': out.push_back({TokenKind::Equals, "=", Rational(0), span_at(start, 1)}); ++i; break;
      case '|': out.push_back({TokenKind::Bar, "|", Rational(0), span_at(start, 1)}); ++i; break;
      case '-':
        if (i + 1 < payload.size() && payload[i + 1] == '>') {
          out.push_back({TokenKind::Arrow, "->", Rational(0), span_at(start, 2)});
          i += 2;
          break;
        }
        [[fallthrough]];
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", span_at(start, 1));
    }
  }
  out.push_back({TokenKind::End, "", Rational(0), span_at(payload.size(), 0)});
  return out;
}

inline const std::unordered_set<std::string>& reserved_words() {
  static const std::unordered_set<std::string> words{
      "not", "and", "or", "true", "false", "in", "exactly_one", "at_most_one"};
  return words;
}

// Recursive-descent formula parser over a token stream.
//
//   expr    := or ('->' expr)?          right-associative
//   or      := and ('or' and)*          left-associative
//   and     := unary ('and' unary)*     left-associative
//   unary   := 'not' unary | primary
//   primary := 'true' | 'false' | atom | sugar '(' expr (',' expr)* ')' | '(' expr ')'
class FormulaParser {
 public:
  FormulaParser(const std::vector<Token>& tokens, std::size_t& pos,
                const std::unordered_set<std::string>& vocabulary)
      : tokens_(tokens), pos_(pos), vocabulary_(vocabulary) {}

  Formula parse() { return parse_implies(); }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }
  bool at_ident(std::string_view word) const {
    return peek().kind == TokenKind::Ident && peek().text == word;
  }

  Formula parse_implies() {
    Formula lhs = parse_or();
    if (peek().kind == TokenKind::Arrow) {
      advance();
      return Formula::implication(std::move(lhs), parse_implies());
    }
    return lhs;
  }

  Formula parse_or() {
    Formula lhs = parse_and();
    while (at_ident("or")) {
      advance();
      lhs = Formula::disjunction(std::move(lhs), parse_and());
    }
    return lhs;
  }

  Formula parse_and() {
    Formula lhs = parse_unary();
    while (at_ident("and")) {
      advance();
      lhs = Formula::conjunction(std::move(lhs), parse_unary());
    }
    return lhs;
  }

  Formula parse_unary() {
    if (at_ident("not")) {
      advance();
      return Formula::negation(parse_unary());
    }
    return parse_primary();
  }

  Formula parse_primary() {
    const Token& t = peek();
    if (t.kind == TokenKind::LParen) {
      advance();
      Formula inner = parse_implies();
      expect(TokenKind::RParen, "expected ')'");
      return inner;
    }
    if (t.kind != TokenKind::Ident) {
      throw ParseError("expected a formula", t.span);
    }
    if (t.text == "true") { advance(); return Formula::truth(); }
    if (t.text == "false") { advance(); return Formula::contradiction(); }
    if (t.text == "exactly_one" || t.text == "at_most_one") {
      const bool exactly = t.text == "exactly_one";
      advance();
      expect(TokenKind::LParen, "expected '(' after '" + t.text + "'");
      std::vector<Formula> args;
      args.push_back(parse_implies());
      while (peek().kind == TokenKind::Comma) {
        advance();
        args.push_back(parse_implies());
      }
      expect(TokenKind::RParen, "expected ')'");
      return exactly ? Formula::exactly_one(args) : Formula::at_most_one(args);
    }
    if (reserved_words().count(t.text) != 0) {
      throw ParseError("unexpected keyword '" + t.text + "'", t.span);
    }
    if (vocabulary_.find(t.text) == vocabulary_.end()) {
      throw ParseError("unknown atom '" + t.text + "'", t.span);
    }
    advance();
    return Formula::atom(t.text);
  }

  void expect(TokenKind kind, const std::string& message) {
    if (peek().kind != kind) throw ParseError(message, peek().span);
    ++pos_;
  }

  const std::vector<Token>& tokens_;
  std::size_t& pos_;
  const std::unordered_set<std::string>& vocabulary_;
};

struct DirectiveLine {
  std::string name;
  SourceSpan name_span;
  std::string payload;
  std::size_t line = 1;
  std::size_t payload_column = 1;  // 1-based column of the payload's first char
};

inline std::vector<DirectiveLine> split_directives(std::string_view text) {
  std::vector<DirectiveLine> out;
  std::size_t line_no = 0;
  std::size_t cursor = 0;
  while (cursor <= text.size()) {
    const std::size_t eol = text.find('\n', cursor);
    std::string_view raw = text.substr(
        cursor, eol == std::string_view::npos ? text.size() - cursor : eol - cursor);
    ++line_no;
    cursor = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    const std::size_t hash = raw.find('#');
    if (hash != std::string_view::npos) raw = raw.substr(0, hash);

    std::size_t first = 0;
    while (first < raw.size() && (raw[first] == ' ' || raw[first] == '\t')) ++first;
    if (first == raw.size()) continue;

    const std::size_t colon = raw.find(':', first);
    if (colon == std::string_view::npos) {
      std::size_t wend = first;
      while (wend < raw.size() && raw[wend] != ' ' && raw[wend] != '\t') ++wend;
      throw ParseError("expected a directive of the form 'name: ...'",
                       SourceSpan{line_no, first + 1, wend - first});
    }
    std::size_t name_end = colon;
    while (name_end > first && (raw[name_end - 1] == ' ' || raw[name_end - 1] == '\t')) {
      --name_end;
    }
    DirectiveLine d;
    d.name = std::string(raw.substr(first, name_end - first));
    d.name_span = SourceSpan{line_no, first + 1, name_end - first};
    d.payload = std::string(raw.substr(colon + 1));
    d.line = line_no;
    d.payload_column = colon + 2;
    out.push_back(std::move(d));
  }
  return out;
}

inline SourceSpan span_over(const std::vector<Token>& tokens, std::size_t first,
                            std::size_t last) {
  const SourceSpan a = tokens[first].span;
  const SourceSpan b = tokens[last].span;
  return SourceSpan{a.line, a.column, b.column + b.length - a.column};
}

}  // namespace detail

// Parse the line-oriented `.arg` format into a structurally validated
// Argument. Directives: `atoms:`, `constraint:`, `premise:`, `conclusion:`,
// `label:`; `#` starts a comment; every numeric literal converts to an exact
// rational. Errors throw ParseError with the offending span. `max_atoms`
// bounds the constraint-satisfiability check run as part of validation.
inline Argument parse_argument(std::string_view text,
                               int max_atoms = kDefaultMaxAtoms) {
  using namespace detail;

  const std::vector<DirectiveLine> lines = split_directives(text);
  const SourceSpan doc_start =
      lines.empty() ? SourceSpan{1, 1, 0} : lines.front().name_span;

  Argument argument;
  std::unordered_set<std::string> vocabulary;

  // Atoms first so formulas on earlier lines may reference later declarations.
  for (const DirectiveLine& d : lines) {
    if (d.name != "atoms") continue;
    const auto tokens = tokenize(d.payload, d.line, d.payload_column);
    std::size_t pos = 0;
    for (;;) {
      const Token& t = tokens[pos];
      if (t.kind != TokenKind::Ident) {
        throw ParseError("expected an atom name", t.span);
      }
      if (reserved_words().count(t.text) != 0) {
        throw ParseError("reserved word '" + t.text + "' cannot be an atom", t.span);
      }
      if (!vocabulary.insert(t.text).second) {
        throw ParseError("duplicate atom '" + t.text + "'", t.span);
      }
      argument.atoms.push_back(t.text);
      ++pos;
      if (tokens[pos].kind == TokenKind::End) break;
      if (tokens[pos].kind != TokenKind::Comma) {
        throw ParseError("expected ',' between atoms", tokens[pos].span);
      }
      ++pos;
    }
  }

  auto parse_event = [&](const std::vector<Token>& tokens, std::size_t& pos) {
    if (tokens[pos].kind != TokenKind::Ident ||
        (tokens[pos].text != "P" && tokens[pos].text != "p")) {
      throw ParseError("expected 'P(...)'", tokens[pos].span);
    }
    ++pos;
    if (tokens[pos].kind != TokenKind::LParen) {
      throw ParseError("expected '(' after 'P'", tokens[pos].span);
    }
    ++pos;
    FormulaParser fp(tokens, pos, vocabulary);
    Formula consequent = fp.parse();
    Formula antecedent = Formula::truth();
    if (tokens[pos].kind == TokenKind::Bar) {
      ++pos;
      const std::size_t ante_first = pos;
      antecedent = fp.parse();
      if (antecedent.kind() == FormulaKind::False) {
        throw ParseError("contradictory conditioning event",
                         span_over(tokens, ante_first, pos - 1));
      }
    }
    if (tokens[pos].kind != TokenKind::RParen) {
      throw ParseError("expected ')'", tokens[pos].span);
    }
    ++pos;
    return ConditionalEvent{std::move(consequent), std::move(antecedent)};
  };

  auto parse_bound = [&](const std::vector<Token>& tokens, std::size_t& pos) {
    if (tokens[pos].kind != TokenKind::Number) {
      throw ParseError("expected a probability value", tokens[pos].span);
    }
    const Token& t = tokens[pos++];
    if (t.number < Rational(0) || t.number > Rational(1)) {
      throw ParseError("bound out of [0,1]", t.span);
    }
    return t.number;
  };

  auto expect_end = [](const std::vector<Token>& tokens, std::size_t pos) {
    if (tokens[pos].kind != TokenKind::End) {
      throw ParseError("unexpected trailing input", tokens[pos].span);
    }
  };

  bool have_conclusion = false;
  bool have_label = false;
  std::optional<SourceSpan> first_constraint_span;

  for (const DirectiveLine& d : lines) {
    if (d.name == "atoms") continue;
    if (d.name == "label") {
      if (have_label) throw ParseError("duplicate label", d.name_span);
      have_label = true;
      std::string payload = d.payload;
      const std::size_t b = payload.find_first_not_of(" \t");
      const std::size_t e = payload.find_last_not_of(" \t");
      argument.label =
          b == std::string::npos ? std::string() : payload.substr(b, e - b + 1);
      continue;
    }
    if (d.name == "constraint") {
      const auto tokens = tokenize(d.payload, d.line, d.payload_column);
      std::size_t pos = 0;
      FormulaParser fp(tokens, pos, vocabulary);
      argument.constraints.push_back(fp.parse());
      expect_end(tokens, pos);
      if (!first_constraint_span) first_constraint_span = d.name_span;
      continue;
    }
    if (d.name == "premise") {
      const auto tokens = tokenize(d.payload, d.line, d.payload_column);
      std::size_t pos = 0;
      ConditionalEvent target = parse_event(tokens, pos);
      if (tokens[pos].kind == TokenKind::Equals) {
        ++pos;
        const Rational value = parse_bound(tokens, pos);
        expect_end(tokens, pos);
        argument.premises.push_back(Assessment::point(std::move(target), value));
      } else if (tokens[pos].kind == TokenKind::Ident && tokens[pos].text == "in") {
        ++pos;
        if (tokens[pos].kind != TokenKind::LBracket) {
          throw ParseError("expected '['", tokens[pos].span);
        }
        ++pos;
        const Rational lo = parse_bound(tokens, pos);
        if (tokens[pos].kind != TokenKind::Comma) {
          throw ParseError("expected ','", tokens[pos].span);
        }
        ++pos;
        const std::size_t hi_token = pos;
        const Rational hi = parse_bound(tokens, pos);
        if (tokens[pos].kind != TokenKind::RBracket) {
          throw ParseError("expected ']'", tokens[pos].span);
        }
        ++pos;
        expect_end(tokens, pos);
        if (lo > hi) {
          throw ParseError("inverted bounds (lower > upper)", tokens[hi_token].span);
        }
        argument.premises.push_back(Assessment::interval(std::move(target), lo, hi));
      } else {
        throw ParseError("expected '=' or 'in' after the event", tokens[pos].span);
      }
      continue;
    }
    if (d.name == "conclusion") {
      if (have_conclusion) throw ParseError("duplicate conclusion", d.name_span);
      have_conclusion = true;
      const auto tokens = tokenize(d.payload, d.line, d.payload_column);
      std::size_t pos = 0;
      argument.conclusion = parse_event(tokens, pos);
      expect_end(tokens, pos);
      continue;
    }
    throw ParseError("unknown directive '" + d.name + "'", d.name_span);
  }

  if (argument.atoms.empty()) {
    throw ParseError("missing 'atoms:' directive", doc_start);
  }
  if (!have_conclusion) {
    throw ParseError("missing 'conclusion:' directive", doc_start);
  }

  const ValidationReport report = validate(argument, max_atoms);
  for (const ValidationIssue& issue : report.issues) {
    if (issue.code == "empty-constituent-space") {
      throw ParseError(issue.message,
                       first_constraint_span ? *first_constraint_span : doc_start);
    }
    throw ParseError(issue.message, doc_start);
  }
  return argument;
}

// Formatting rule for probability values in documents: exact finite decimals
// for small denominators, fractions otherwise (and always for denominators
// over 100).
inline std::string render_bound(const Rational& v) {
  if (v.is_integer()) return v.numerator().str();
  if (v.denominator() <= 100 && v.has_finite_decimal()) return v.to_decimal_exact();
  return v.to_fraction();
}

// Canonical document for an argument; parse_argument(render_argument(a)) is
// structurally equal to `a`.
inline std::string render_argument(const Argument& argument) {
  std::string out;
  if (!argument.label.empty()) {
    out += "label: " + argument.label + "\n";
  }
  out += "atoms: ";
  for (std::size_t i = 0; i < argument.atoms.size(); ++i) {
    if (i > 0) out += ", ";
    out += argument.atoms[i];
  }
  out += "\n";
  for (const Formula& c : argument.constraints) {
    out += "constraint: " + c.to_string() + "\n";
  }
  for (const Assessment& p : argument.premises) {
    out += "premise: " + p.target.to_string();
    if (p.is_point()) {
      out += " = " + render_bound(p.lower);
    } else {
      out += " in [" + render_bound(p.lower) + ", " + render_bound(p.upper) + "]";
    }
    out += "\n";
  }
  out += "conclusion: " + argument.conclusion.to_string() + "\n";
  return out;
}

}  // namespace argstrength
