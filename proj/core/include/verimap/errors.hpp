// Copyright (c) verimap contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace verimap {

/// Error categories; the CLI maps these onto exit codes.
enum class Errc {
  Domain,
  DistSum,
  Arity,
  UnknownVariable,
  DuplicateName,
  Syntax,
  IntegerOverflow,
  ZeroPartition,
  SimplexViolation,
  ModelMismatch,
  FileSyntax,
  Io,
};

const char* to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Location and hint attached to a constraint-syntax failure.
struct ParseDiagnostic {
  std::size_t offset = 0;  // byte offset into the parsed text
  std::string message;
  std::string expected;  // token hint, may be empty
};

class SyntaxError : public Error {
 public:
  explicit SyntaxError(ParseDiagnostic diagnostic);

  const ParseDiagnostic& diagnostic() const noexcept { return diagnostic_; }

 private:
  ParseDiagnostic diagnostic_;
};

class DomainError : public Error {
 public:
  explicit DomainError(std::string m) : Error(Errc::Domain, std::move(m)) {}
};

class DistSumError : public Error {
 public:
  explicit DistSumError(std::string m) : Error(Errc::DistSum, std::move(m)) {}
};

class ArityError : public Error {
 public:
  explicit ArityError(std::string m) : Error(Errc::Arity, std::move(m)) {}
};

class UnknownVariableError : public Error {
 public:
  explicit UnknownVariableError(std::string m)
      : Error(Errc::UnknownVariable, std::move(m)) {}
};

class DuplicateNameError : public Error {
 public:
  explicit DuplicateNameError(std::string m)
      : Error(Errc::DuplicateName, std::move(m)) {}
};

class IntegerOverflowError : public Error {
 public:
  explicit IntegerOverflowError(std::string m)
      : Error(Errc::IntegerOverflow, std::move(m)) {}
};

class ZeroPartitionError : public Error {
 public:
  explicit ZeroPartitionError(std::string m)
      : Error(Errc::ZeroPartition, std::move(m)) {}
};

class SimplexViolationError : public Error {
 public:
  explicit SimplexViolationError(std::string m)
      : Error(Errc::SimplexViolation, std::move(m)) {}
};

class ModelMismatchError : public Error {
 public:
  explicit ModelMismatchError(std::string m)
      : Error(Errc::ModelMismatch, std::move(m)) {}
};

class FileSyntaxError : public Error {
 public:
  explicit FileSyntaxError(std::string m)
      : Error(Errc::FileSyntax, std::move(m)) {}
};

class IoError : public Error {
 public:
  explicit IoError(std::string m) : Error(Errc::Io, std::move(m)) {}
};

}  // namespace verimap
