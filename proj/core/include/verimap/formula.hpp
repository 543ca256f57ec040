// Copyright (c) verimap contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace verimap {

class Model;
struct Assignment;

enum class TermKind { IntConst, VarRef, Add, Sub, Mul, Neg };
enum class CompareOp { Eq, Ne, Lt, Le, Gt, Ge };
enum class FormulaKind { BoolConst, Compare, Not, And, Or, Implies, Iff };

/// Integer term over declared variables. Neg uses `lhs` only.
struct Term {
  TermKind kind = TermKind::IntConst;
  std::int64_t value = 0;   // IntConst
  std::string name;         // VarRef
  std::unique_ptr<Term> lhs, rhs;
};

/// Propositional formula over comparisons of terms. Not uses `lhs` only.
struct Formula {
  FormulaKind kind = FormulaKind::BoolConst;
  bool value = false;                         // BoolConst
  CompareOp op = CompareOp::Eq;               // Compare
  std::unique_ptr<Term> lhs_term, rhs_term;   // Compare
  std::unique_ptr<Formula> lhs, rhs;
};

using TermPtr = std::unique_ptr<Term>;
using FormulaPtr = std::unique_ptr<Formula>;

// Construction helpers.
TermPtr int_const(std::int64_t value);
TermPtr var_ref(std::string name);
TermPtr add(TermPtr lhs, TermPtr rhs);
TermPtr sub(TermPtr lhs, TermPtr rhs);
TermPtr mul(TermPtr lhs, TermPtr rhs);
TermPtr neg(TermPtr operand);
FormulaPtr bool_const(bool value);
FormulaPtr compare(TermPtr lhs, CompareOp op, TermPtr rhs);
FormulaPtr negation(FormulaPtr operand);
FormulaPtr conjunction(FormulaPtr lhs, FormulaPtr rhs);
FormulaPtr disjunction(FormulaPtr lhs, FormulaPtr rhs);
FormulaPtr implication(FormulaPtr lhs, FormulaPtr rhs);
FormulaPtr equivalence(FormulaPtr lhs, FormulaPtr rhs);

TermPtr clone(const Term& t);
FormulaPtr clone(const Formula& f);

bool structurally_equal(const Term& a, const Term& b);
bool structurally_equal(const Formula& a, const Formula& b);

/// Canonical concrete syntax; parse(to_string(f)) is structurally equal to f
/// whenever every IntConst in f is non-negative (all parser output is).
std::string to_string(const Term& t);
std::string to_string(const Formula& f);
const char* to_string(CompareOp op) noexcept;

std::set<std::string> referenced_variables(const Formula& f);

/// Satisfaction of f by assignment a, with exact checked 64-bit arithmetic.
/// Throws UnknownVariableError / IntegerOverflowError.
bool evaluate(const Formula& f, const Assignment& a, const Model& model);

/// All satisfying assignments, in canonical enumeration order.
std::vector<Assignment> enumerate_models(const Formula& f, const Model& model);

}  // namespace verimap
