/*
   Copyright 2026 The dunford authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dunford {

enum class ErrorKind {
  DivisionByZero,
  DivisionByZeroPolynomial,
  BothZero,
  ZeroPolynomial,
  ZeroModulus,
  NotCoprime,
  LengthMismatch,
  DimensionMismatch,
  SingularMatrix,
  SpectrumMismatch,
  ConstantPolynomial,
  EndpointIsRoot,
  EmptyInterval,
  IterationBoundExceeded,
  InvariantBreach,
};

/// Base of every error raised by the library. Carries a machine-checkable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// The caller passed arguments outside an operation's domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Raised when a congruence system has two moduli sharing a factor.
class NotCoprimeError : public PreconditionError {
 public:
  NotCoprimeError(std::size_t first, std::size_t second)
      : PreconditionError(ErrorKind::NotCoprime,
                          "moduli " + std::to_string(first) + " and " + std::to_string(second) +
                              " are not coprime"),
        first_(first),
        second_(second) {}
  std::size_t first() const noexcept { return first_; }
  std::size_t second() const noexcept { return second_; }

 private:
  std::size_t first_;
  std::size_t second_;
};

/// A proven-impossible state was reached; indicates a bug in the library.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                           ": " + message),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

inline const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::DivisionByZeroPolynomial: return "DivisionByZeroPolynomial";
    case ErrorKind::BothZero: return "BothZero";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::ZeroModulus: return "ZeroModulus";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::SpectrumMismatch: return "SpectrumMismatch";
    case ErrorKind::ConstantPolynomial: return "ConstantPolynomial";
    case ErrorKind::EndpointIsRoot: return "EndpointIsRoot";
    case ErrorKind::EmptyInterval: return "EmptyInterval";
    case ErrorKind::IterationBoundExceeded: return "IterationBoundExceeded";
    case ErrorKind::InvariantBreach: return "InvariantBreach";
  }
  return "Unknown";
}

}  // namespace dunford
