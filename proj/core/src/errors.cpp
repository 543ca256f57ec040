// Copyright (c) verimap contributors.
// SPDX-License-Identifier: Apache-2.0
#include "verimap/errors.hpp"

namespace verimap {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::Domain:
      return "domain";
    case Errc::DistSum:
      return "dist-sum";
    case Errc::Arity:
      return "arity";
    case Errc::UnknownVariable:
      return "unknown-variable";
    case Errc::DuplicateName:
      return "duplicate-name";
    case Errc::Syntax:
      return "syntax";
    case Errc::IntegerOverflow:
      return "integer-overflow";
    case Errc::ZeroPartition:
      return "zero-partition";
    case Errc::SimplexViolation:
      return "simplex-violation";
    case Errc::ModelMismatch:
      return "model-mismatch";
    case Errc::FileSyntax:
      return "file-syntax";
    case Errc::Io:
      return "io";
  }
  return "unknown";
}

namespace {

std::string format_diagnostic(const ParseDiagnostic& d) {
  std::string out =
      "syntax error at offset " + std::to_string(d.offset) + ": " + d.message;
  if (!d.expected.empty()) out += " (expected " + d.expected + ")";
  return out;
}

}  // namespace

SyntaxError::SyntaxError(ParseDiagnostic diagnostic)
    : Error(Errc::Syntax, format_diagnostic(diagnostic)),
      diagnostic_(std::move(diagnostic)) {}

}  // namespace verimap
