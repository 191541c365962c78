#pragma once

#include <stdexcept>
#include <string>

namespace meshsum {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the supported domain (e.g. mesh degree r < 7).
class DomainError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// expand() called on a disk that is not convex.
class ConvexityError : public Error {
 public:
  using Error::Error;
};

/// Explicit construction would exceed the configured vertex cap.
class BudgetError : public Error {
 public:
  BudgetError(std::string what, long long requested, long long budget)
      : Error(std::move(what)), requested_(requested), budget_(budget) {}
  long long requested() const { return requested_; }
  long long budget() const { return budget_; }

 private:
  long long requested_;
  long long budget_;
};

/// Face tracing or boundary structure does not describe a triangulated disk.
class MalformedDiskError : public Error {
 public:
  using Error::Error;
};

/// An expansion produced a boundary vertex whose degree is not 3 or 4.
class CensusContradiction : public Error {
 public:
  using Error::Error;
};

/// Seed descriptor violates a necessary condition; component() names it.
class InvalidSeed : public Error {
 public:
  InvalidSeed(std::string component, const std::string& detail)
      : Error("invalid seed (" + component + "): " + detail),
        component_(std::move(component)) {}
  const std::string& component() const { return component_; }

 private:
  std::string component_;
};

/// Euler sum undefined (gamma = 2, i.e. r = 6).
class UndefinedSum : public Error {
 public:
  using Error::Error;
};

/// Evaluation of a generating function at a root of its denominator.
class PoleError : public Error {
 public:
  PoleError(std::string what, std::string roots)
      : Error(std::move(what)), roots_(std::move(roots)) {}
  const std::string& roots() const { return roots_; }

 private:
  std::string roots_;
};

class LayoutError : public Error {
 public:
  using Error::Error;
};

/// Coupled and second-order recurrences disagree (internal cross-check).
class RecurrenceMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace meshsum
