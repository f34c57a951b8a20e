// Copyright 2026 The cutmit authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace cutmit {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Input violates a documented precondition or invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A document could not be parsed; line() is 0 when no line applies.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what), line_(0) {}
  ParseError(const std::string& what, int line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Dense simulation requested above the configured qubit limit.
class UnsupportedSizeError : public Error {
 public:
  using Error::Error;
};

/// Requested cuts do not split the circuit into two fragments.
class InfeasibleCutError : public Error {
 public:
  using Error::Error;
};

/// Variant enumeration would exceed the combinatorial budget.
class CombinatorialBudgetError : public Error {
 public:
  using Error::Error;
};

/// A check pair cannot be built for the requested qubit.
class CheckInfeasibleError : public Error {
 public:
  using Error::Error;
};

/// Distribution has no usable probability mass.
class DegenerateDistributionError : public Error {
 public:
  using Error::Error;
};

/// Post-selection removed all probability mass.
class EmptyPostSelectionError : public Error {
 public:
  using Error::Error;
};

/// Cut planning could not identify unambiguous gate boundaries.
class PlanningError : public Error {
 public:
  using Error::Error;
};

/// A backend failed while executing a fragment variant.
class ExecutionError : public Error {
 public:
  using Error::Error;
};

}  // namespace cutmit
