// Copyright (c) verimap contributors.
// SPDX-License-Identifier: Apache-2.0
#include "verimap/formula.hpp"

#include <utility>

#include "verimap/errors.hpp"
#include "verimap/model.hpp"

namespace verimap {

TermPtr int_const(std::int64_t value) {
  auto t = std::make_unique<Term>();
  t->kind = TermKind::IntConst;
  t->value = value;
  return t;
}

TermPtr var_ref(std::string name) {
  auto t = std::make_unique<Term>();
  t->kind = TermKind::VarRef;
  t->name = std::move(name);
  return t;
}

namespace {

TermPtr binary_term(TermKind kind, TermPtr lhs, TermPtr rhs) {
  auto t = std::make_unique<Term>();
  t->kind = kind;
  t->lhs = std::move(lhs);
  t->rhs = std::move(rhs);
  return t;
}

FormulaPtr binary_formula(FormulaKind kind, FormulaPtr lhs, FormulaPtr rhs) {
  auto f = std::make_unique<Formula>();
  f->kind = kind;
  f->lhs = std::move(lhs);
  f->rhs = std::move(rhs);
  return f;
}

}  // namespace

TermPtr add(TermPtr lhs, TermPtr rhs) {
  return binary_term(TermKind::Add, std::move(lhs), std::move(rhs));
}

TermPtr sub(TermPtr lhs, TermPtr rhs) {
  return binary_term(TermKind::Sub, std::move(lhs), std::move(rhs));
}

TermPtr mul(TermPtr lhs, TermPtr rhs) {
  return binary_term(TermKind::Mul, std::move(lhs), std::move(rhs));
}

TermPtr neg(TermPtr operand) {
  auto t = std::make_unique<Term>();
  t->kind = TermKind::Neg;
  t->lhs = std::move(operand);
  return t;
}

FormulaPtr bool_const(bool value) {
  auto f = std::make_unique<Formula>();
  f->kind = FormulaKind::BoolConst;
  f->value = value;
  return f;
}

FormulaPtr compare(TermPtr lhs, CompareOp op, TermPtr rhs) {
  auto f = std::make_unique<Formula>();
  f->kind = FormulaKind::Compare;
  f->op = op;
  f->lhs_term = std::move(lhs);
  f->rhs_term = std::move(rhs);
  return f;
}

FormulaPtr negation(FormulaPtr operand) {
  auto f = std::make_unique<Formula>();
  f->kind = FormulaKind::Not;
  f->lhs = std::move(operand);
  return f;
}

FormulaPtr conjunction(FormulaPtr lhs, FormulaPtr rhs) {
  return binary_formula(FormulaKind::And, std::move(lhs), std::move(rhs));
}

FormulaPtr disjunction(FormulaPtr lhs, FormulaPtr rhs) {
  return binary_formula(FormulaKind::Or, std::move(lhs), std::move(rhs));
}

FormulaPtr implication(FormulaPtr lhs, FormulaPtr rhs) {
  return binary_formula(FormulaKind::Implies, std::move(lhs), std::move(rhs));
}

FormulaPtr equivalence(FormulaPtr lhs, FormulaPtr rhs) {
  return binary_formula(FormulaKind::Iff, std::move(lhs), std::move(rhs));
}

TermPtr clone(const Term& t) {
  auto out = std::make_unique<Term>();
  out->kind = t.kind;
  out->value = t.value;
  out->name = t.name;
  if (t.lhs) out->lhs = clone(*t.lhs);
  if (t.rhs) out->rhs = clone(*t.rhs);
  return out;
}

FormulaPtr clone(const Formula& f) {
  auto out = std::make_unique<Formula>();
  out->kind = f.kind;
  out->value = f.value;
  out->op = f.op;
  if (f.lhs_term) out->lhs_term = clone(*f.lhs_term);
  if (f.rhs_term) out->rhs_term = clone(*f.rhs_term);
  if (f.lhs) out->lhs = clone(*f.lhs);
  if (f.rhs) out->rhs = clone(*f.rhs);
  return out;
}

namespace {

bool both_or_neither_equal(const Term* a, const Term* b) {
  if (!a || !b) return !a && !b;
  return structurally_equal(*a, *b);
}

bool both_or_neither_equal(const Formula* a, const Formula* b) {
  if (!a || !b) return !a && !b;
  return structurally_equal(*a, *b);
}

}  // namespace

bool structurally_equal(const Term& a, const Term& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case TermKind::IntConst:
      return a.value == b.value;
    case TermKind::VarRef:
      return a.name == b.name;
    default:
      return both_or_neither_equal(a.lhs.get(), b.lhs.get()) &&
             both_or_neither_equal(a.rhs.get(), b.rhs.get());
  }
}

bool structurally_equal(const Formula& a, const Formula& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case FormulaKind::BoolConst:
      return a.value == b.value;
    case FormulaKind::Compare:
      return a.op == b.op &&
             both_or_neither_equal(a.lhs_term.get(), b.lhs_term.get()) &&
             both_or_neither_equal(a.rhs_term.get(), b.rhs_term.get());
    default:
      return both_or_neither_equal(a.lhs.get(), b.lhs.get()) &&
             both_or_neither_equal(a.rhs.get(), b.rhs.get());
  }
}

namespace {

// Binding tightness, matching the parser. Higher binds tighter.
int term_precedence(TermKind kind) {
  switch (kind) {
    case TermKind::Add:
    case TermKind::Sub:
      return 1;
    case TermKind::Mul:
      return 2;
    case TermKind::Neg:
      return 3;
    default:
      return 4;
  }
}

int formula_precedence(FormulaKind kind) {
  switch (kind) {
    case FormulaKind::Iff:
      return 1;
    case FormulaKind::Implies:
      return 2;
    case FormulaKind::Or:
      return 3;
    case FormulaKind::And:
      return 4;
    case FormulaKind::Not:
      return 5;
    default:
      return 6;
  }
}

void print_term(const Term& t, std::string& out);

void print_term_child(const Term& child, int min_prec, std::string& out) {
  bool parens = term_precedence(child.kind) < min_prec;
  if (parens) out += '(';
  print_term(child, out);
  if (parens) out += ')';
}

void print_term(const Term& t, std::string& out) {
  switch (t.kind) {
    case TermKind::IntConst:
      out += std::to_string(t.value);
      return;
    case TermKind::VarRef:
      out += t.name;
      return;
    case TermKind::Add:
    case TermKind::Sub:
      print_term_child(*t.lhs, 1, out);
      out += t.kind == TermKind::Add ? " + " : " - ";
      print_term_child(*t.rhs, 2, out);
      return;
    case TermKind::Mul:
      print_term_child(*t.lhs, 2, out);
      out += " * ";
      print_term_child(*t.rhs, 3, out);
      return;
    case TermKind::Neg:
      out += '-';
      print_term_child(*t.lhs, 3, out);
      return;
  }
}

void print_formula(const Formula& f, std::string& out);

void print_formula_child(const Formula& child, int min_prec, std::string& out) {
  bool parens = formula_precedence(child.kind) < min_prec;
  if (parens) out += '(';
  print_formula(child, out);
  if (parens) out += ')';
}

void print_formula(const Formula& f, std::string& out) {
  switch (f.kind) {
    case FormulaKind::BoolConst:
      out += f.value ? "true" : "false";
      return;
    case FormulaKind::Compare:
      print_term(*f.lhs_term, out);
      out += ' ';
      out += to_string(f.op);
      out += ' ';
      print_term(*f.rhs_term, out);
      return;
    case FormulaKind::Not:
      out += "not ";
      print_formula_child(*f.lhs, 5, out);
      return;
    case FormulaKind::And:
      print_formula_child(*f.lhs, 4, out);
      out += " and ";
      print_formula_child(*f.rhs, 5, out);
      return;
    case FormulaKind::Or:
      print_formula_child(*f.lhs, 3, out);
      out += " or ";
      print_formula_child(*f.rhs, 4, out);
      return;
    case FormulaKind::Implies:
      // right-associative
      print_formula_child(*f.lhs, 3, out);
      out += " implies ";
      print_formula_child(*f.rhs, 2, out);
      return;
    case FormulaKind::Iff:
      print_formula_child(*f.lhs, 1, out);
      out += " iff ";
      print_formula_child(*f.rhs, 2, out);
      return;
  }
}

}  // namespace

std::string to_string(const Term& t) {
  std::string out;
  print_term(t, out);
  return out;
}

std::string to_string(const Formula& f) {
  std::string out;
  print_formula(f, out);
  return out;
}

const char* to_string(CompareOp op) noexcept {
  switch (op) {
    case CompareOp::Eq:
      return "=";
    case CompareOp::Ne:
      return "!=";
    case CompareOp::Lt:
      return "<";
    case CompareOp::Le:
      return "<=";
    case CompareOp::Gt:
      return ">";
    case CompareOp::Ge:
      return ">=";
  }
  return "?";
}

namespace {

void collect_variables(const Term& t, std::set<std::string>& out) {
  if (t.kind == TermKind::VarRef) out.insert(t.name);
  if (t.lhs) collect_variables(*t.lhs, out);
  if (t.rhs) collect_variables(*t.rhs, out);
}

void collect_variables(const Formula& f, std::set<std::string>& out) {
  if (f.lhs_term) collect_variables(*f.lhs_term, out);
  if (f.rhs_term) collect_variables(*f.rhs_term, out);
  if (f.lhs) collect_variables(*f.lhs, out);
  if (f.rhs) collect_variables(*f.rhs, out);
}

std::int64_t evaluate_term(const Term& t, const Assignment& a,
                           const Model& model) {
  switch (t.kind) {
    case TermKind::IntConst:
      return t.value;
    case TermKind::VarRef: {
      auto idx = model.index_of(t.name);
      if (!idx)
        throw UnknownVariableError("unknown variable '" + t.name + "'");
      return a.values[*idx];
    }
    case TermKind::Add:
    case TermKind::Sub:
    case TermKind::Mul: {
      std::int64_t lhs = evaluate_term(*t.lhs, a, model);
      std::int64_t rhs = evaluate_term(*t.rhs, a, model);
      std::int64_t out = 0;
      bool overflow = false;
      switch (t.kind) {
        case TermKind::Add:
          overflow = __builtin_add_overflow(lhs, rhs, &out);
          break;
        case TermKind::Sub:
          overflow = __builtin_sub_overflow(lhs, rhs, &out);
          break;
        default:
          overflow = __builtin_mul_overflow(lhs, rhs, &out);
          break;
      }
      if (overflow)
        throw IntegerOverflowError("term '" + to_string(t) +
                                   "' overflows 64-bit range");
      return out;
    }
    case TermKind::Neg: {
      std::int64_t operand = evaluate_term(*t.lhs, a, model);
      std::int64_t out = 0;
      if (__builtin_sub_overflow(std::int64_t{0}, operand, &out))
        throw IntegerOverflowError("term '" + to_string(t) +
                                   "' overflows 64-bit range");
      return out;
    }
  }
  throw DomainError("corrupt term node");
}

bool evaluate_formula(const Formula& f, const Assignment& a,
                      const Model& model) {
  switch (f.kind) {
    case FormulaKind::BoolConst:
      return f.value;
    case FormulaKind::Compare: {
      std::int64_t lhs = evaluate_term(*f.lhs_term, a, model);
      std::int64_t rhs = evaluate_term(*f.rhs_term, a, model);
      switch (f.op) {
        case CompareOp::Eq:
          return lhs == rhs;
        case CompareOp::Ne:
          return lhs != rhs;
        case CompareOp::Lt:
          return lhs < rhs;
        case CompareOp::Le:
          return lhs <= rhs;
        case CompareOp::Gt:
          return lhs > rhs;
        case CompareOp::Ge:
          return lhs >= rhs;
      }
      return false;
    }
    case FormulaKind::Not:
      return !evaluate_formula(*f.lhs, a, model);
    case FormulaKind::And:
      return evaluate_formula(*f.lhs, a, model) &&
             evaluate_formula(*f.rhs, a, model);
    case FormulaKind::Or:
      return evaluate_formula(*f.lhs, a, model) ||
             evaluate_formula(*f.rhs, a, model);
    case FormulaKind::Implies:
      return !evaluate_formula(*f.lhs, a, model) ||
             evaluate_formula(*f.rhs, a, model);
    case FormulaKind::Iff:
      return evaluate_formula(*f.lhs, a, model) ==
             evaluate_formula(*f.rhs, a, model);
  }
  throw DomainError("corrupt formula node");
}

}  // namespace

std::set<std::string> referenced_variables(const Formula& f) {
  std::set<std::string> out;
  collect_variables(f, out);
  return out;
}

bool evaluate(const Formula& f, const Assignment& a, const Model& model) {
  if (a.values.size() != model.size())
    throw ArityError("assignment has " + std::to_string(a.values.size()) +
                     " values, model has " + std::to_string(model.size()) +
                     " variables");
  return evaluate_formula(f, a, model);
}

std::vector<Assignment> enumerate_models(const Formula& f,
                                         const Model& model) {
  std::vector<Assignment> out;
  for (const Assignment& a : assignments(model)) {
    if (evaluate(f, a, model)) out.push_back(a);
  }
  return out;
}

}  // namespace verimap
