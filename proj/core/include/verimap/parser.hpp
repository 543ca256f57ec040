// Copyright (c) verimap contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string_view>

#include "verimap/formula.hpp"

namespace verimap {

/// Parses the constraint language. Throws SyntaxError carrying a
/// ParseDiagnostic on malformed input.
///
/// Grammar, loosest to tightest binding:
///   iff < implies < or < and < not < comparison < + - < * < unary - < atom
/// `true`/`false` are keywords, parentheses group, comparisons are
/// non-associative. implies is right-associative; the other binary
/// connectives and the arithmetic operators are left-associative.
FormulaPtr parse(std::string_view text);

}  // namespace verimap
