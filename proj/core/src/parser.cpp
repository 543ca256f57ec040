// Copyright (c) verimap contributors.
// SPDX-License-Identifier: Apache-2.0
#include "verimap/parser.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <string>
#include <vector>

#include "verimap/errors.hpp"

namespace verimap {

namespace {

enum class TokKind {
  End,
  Ident,
  IntLit,
  KwTrue,
  KwFalse,
  KwNot,
  KwAnd,
  KwOr,
  KwImplies,
  KwIff,
  LParen,
  RParen,
  Plus,
  Minus,
  Star,
  Eq,
  Ne,
  Lt,
  Le,
  Gt,
  Ge,
};

struct Token {
  TokKind kind = TokKind::End;
  std::string_view text;
  std::size_t offset = 0;
  std::int64_t value = 0;  // IntLit
};

TokKind classify_word(std::string_view word) {
  if (word == "true") return TokKind::KwTrue;
  if (word == "false") return TokKind::KwFalse;
  if (word == "not") return TokKind::KwNot;
  if (word == "and") return TokKind::KwAnd;
  if (word == "or") return TokKind::KwOr;
  if (word == "implies") return TokKind::KwImplies;
  if (word == "iff") return TokKind::KwIff;
  return TokKind::Ident;
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  auto push = [&](TokKind kind, std::size_t begin, std::size_t len) {
    tokens.push_back({kind, text.substr(begin, len), begin, 0});
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t begin = i;
      while (i < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[i])))
        ++i;
      Token tok{TokKind::IntLit, text.substr(begin, i - begin), begin, 0};
      auto [ptr, ec] = std::from_chars(tok.text.data(),
                                       tok.text.data() + tok.text.size(),
                                       tok.value);
      if (ec != std::errc{} || ptr != tok.text.data() + tok.text.size())
        throw SyntaxError(
            {begin, "integer literal out of 64-bit range", ""});
      tokens.push_back(tok);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t begin = i;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) ||
              text[i] == '_'))
        ++i;
      std::string_view word = text.substr(begin, i - begin);
      push(classify_word(word), begin, word.size());
      continue;
    }
    switch (c) {
      case '(':
        push(TokKind::LParen, i, 1);
        ++i;
        continue;
      case ')':
        push(TokKind::RParen, i, 1);
        ++i;
        continue;
      case '+':
        push(TokKind::Plus, i, 1);
        ++i;
        continue;
      case '-':
        push(TokKind::Minus, i, 1);
        ++i;
        continue;
      case '*':
        push(TokKind::Star, i, 1);
        ++i;
        continue;
      case '=':
        push(TokKind::Eq, i, 1);
        ++i;
        continue;
      case '!':
        if (i + 1 < text.size() && text[i + 1] == '=') {
          push(TokKind::Ne, i, 2);
          i += 2;
          continue;
        }
        throw SyntaxError({i, "stray '!'", "'!='"});
      case '<':
        if (i + 1 < text.size() && text[i + 1] == '=') {
          push(TokKind::Le, i, 2);
          i += 2;
        } else {
          push(TokKind::Lt, i, 1);
          ++i;
        }
        continue;
      case '>':
        if (i + 1 < text.size() && text[i + 1] == '=') {
          push(TokKind::Ge, i, 2);
          i += 2;
        } else {
          push(TokKind::Gt, i, 1);
          ++i;
        }
        continue;
      default:
        throw SyntaxError(
            {i, std::string("unexpected character '") + c + "'", ""});
    }
  }
  tokens.push_back({TokKind::End, {}, text.size(), 0});
  return tokens;
}

// Internal control-flow signal; the recorded furthest diagnostic is what
// surfaces as SyntaxError.
struct ParseFailure {};

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  FormulaPtr run() {
    try {
      FormulaPtr f = parse_iff();
      if (tokens_[pos_].kind != TokKind::End) fail("end of input");
      return f;
    } catch (const ParseFailure&) {
      throw SyntaxError(furthest_);
    }
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }

  bool accept(TokKind kind) {
    if (tokens_[pos_].kind != kind) return false;
    ++pos_;
    return true;
  }

  void expect(TokKind kind, const char* what) {
    if (!accept(kind)) fail(what);
  }

  [[noreturn]] void fail(std::string expected) {
    const Token& tok = tokens_[pos_];
    if (!have_failure_ || tok.offset > furthest_.offset) {
      std::string message =
          tok.kind == TokKind::End
              ? "unexpected end of input"
              : "unexpected '" + std::string(tok.text) + "'";
      furthest_ = {tok.offset, std::move(message), std::move(expected)};
      have_failure_ = true;
    }
    throw ParseFailure{};
  }

  FormulaPtr parse_iff() {
    FormulaPtr lhs = parse_implies();
    while (accept(TokKind::KwIff)) lhs = equivalence(std::move(lhs), parse_implies());
    return lhs;
  }

  FormulaPtr parse_implies() {
    FormulaPtr lhs = parse_or();
    if (accept(TokKind::KwImplies))
      return implication(std::move(lhs), parse_implies());
    return lhs;
  }

  FormulaPtr parse_or() {
    FormulaPtr lhs = parse_and();
    while (accept(TokKind::KwOr)) lhs = disjunction(std::move(lhs), parse_and());
    return lhs;
  }

  FormulaPtr parse_and() {
    FormulaPtr lhs = parse_not();
    while (accept(TokKind::KwAnd)) lhs = conjunction(std::move(lhs), parse_not());
    return lhs;
  }

  FormulaPtr parse_not() {
    if (accept(TokKind::KwNot)) return negation(parse_not());
    return parse_formula_atom();
  }

  // A formula atom is a boolean literal, a parenthesized formula, or a
  // comparison. '(' is ambiguous between the last two; try the formula
  // reading first and fall back to a comparison whose left term starts
  // with '('.
  FormulaPtr parse_formula_atom() {
    if (accept(TokKind::KwTrue)) return bool_const(true);
    if (accept(TokKind::KwFalse)) return bool_const(false);
    if (peek().kind == TokKind::LParen) {
      std::size_t mark = pos_;
      try {
        ++pos_;
        FormulaPtr f = parse_iff();
        expect(TokKind::RParen, ")");
        return f;
      } catch (const ParseFailure&) {
        pos_ = mark;
      }
    }
    return parse_comparison();
  }

  FormulaPtr parse_comparison() {
    TermPtr lhs = parse_add();
    CompareOp op;
    switch (peek().kind) {
      case TokKind::Eq:
        op = CompareOp::Eq;
        break;
      case TokKind::Ne:
        op = CompareOp::Ne;
        break;
      case TokKind::Lt:
        op = CompareOp::Lt;
        break;
      case TokKind::Le:
        op = CompareOp::Le;
        break;
      case TokKind::Gt:
        op = CompareOp::Gt;
        break;
      case TokKind::Ge:
        op = CompareOp::Ge;
        break;
      default:
        fail("a comparison operator");
    }
    ++pos_;
    return compare(std::move(lhs), op, parse_add());
  }

  TermPtr parse_add() {
    TermPtr lhs = parse_mul();
    while (true) {
      if (accept(TokKind::Plus))
        lhs = add(std::move(lhs), parse_mul());
      else if (accept(TokKind::Minus))
        lhs = sub(std::move(lhs), parse_mul());
      else
        return lhs;
    }
  }

  TermPtr parse_mul() {
    TermPtr lhs = parse_unary();
    while (accept(TokKind::Star)) lhs = mul(std::move(lhs), parse_unary());
    return lhs;
  }

  TermPtr parse_unary() {
    if (accept(TokKind::Minus)) return neg(parse_unary());
    return parse_term_atom();
  }

  TermPtr parse_term_atom() {
    const Token& tok = peek();
    switch (tok.kind) {
      case TokKind::IntLit:
        ++pos_;
        return int_const(tok.value);
      case TokKind::Ident:
        ++pos_;
        return var_ref(std::string(tok.text));
      case TokKind::LParen: {
        ++pos_;
        TermPtr t = parse_add();
        expect(TokKind::RParen, ")");
        return t;
      }
      default:
        fail("an integer, a variable or '('");
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  ParseDiagnostic furthest_;
  bool have_failure_ = false;
};

}  // namespace

FormulaPtr parse(std::string_view text) { return Parser(text).run(); }

}  // namespace verimap
