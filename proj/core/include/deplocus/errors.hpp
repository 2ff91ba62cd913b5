// Copyright 2026 The deplocus Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DEPLOCUS_ERRORS_HPP
#define DEPLOCUS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace deplocus {

/// Base class for all library errors. Anything derived from it that is not a
/// CapacityError/BudgetError or an InternalError is a malformed-input problem.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotPrimeError : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroError : public Error {
 public:
  using Error::Error;
};

class ModulusMismatchError : public Error {
 public:
  using Error::Error;
};

class ContextMismatchError : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRangeError : public Error {
 public:
  using Error::Error;
};

class ZeroInputError : public Error {
 public:
  using Error::Error;
};

class ConstantInputError : public Error {
 public:
  using Error::Error;
};

/// Raised by term-wise integration when a monomial has exponent p-1 (mod p)
/// in the integration variable; carries the offending monomial in text form.
class NonIntegrableExponentError : public Error {
 public:
  explicit NonIntegrableExponentError(const std::string& monomial)
      : Error("non-integrable exponent in monomial " + monomial),
        monomial_(monomial) {}
  const std::string& monomial() const noexcept { return monomial_; }

 private:
  std::string monomial_;
};

class WrongArityError : public Error {
 public:
  using Error::Error;
};

class DependentFamilyError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An intermediate value outgrew the configured degree (or modulus) cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// The brute-force search space exceeds the configured candidate budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// A mathematical guarantee of the pipeline was violated; always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

class TheoremViolationError : public InternalError {
 public:
  using InternalError::InternalError;
};

/// Expression parse failure, annotated with a 0-based character offset.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error("syntax error at position " + std::to_string(position) + ": " +
              what),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UnknownVariableError : public Error {
 public:
  explicit UnknownVariableError(const std::string& name)
      : Error("unknown variable '" + name + "'"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// Malformed input document (bad JSON, missing keys, inconsistent lengths).
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace deplocus

#endif  // DEPLOCUS_ERRORS_HPP
