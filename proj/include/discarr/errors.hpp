#pragma once

#include <stdexcept>
#include <string>

namespace discarr {

/// Shape mismatch between operands (non-square input, ragged index lists, ...).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A matrix that had to be inverted turned out to be singular.
class SingularMatrixError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed input document. `where` is a JSON-pointer-like location.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& where, const std::string& what)
      : std::runtime_error(where.empty() ? what : where + ": " + what), where_(where) {}

  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

/// Caller violated an operation's precondition (non-generic input, bad subset size, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A point lies on a hyperplane it was required to avoid.
class OnHyperplaneError : public std::domain_error {
 public:
  OnHyperplaneError(const std::string& which, const std::string& what)
      : std::domain_error(what), which_(which) {}
  const std::string& which() const noexcept { return which_; }

 private:
  std::string which_;
};

}  // namespace discarr
