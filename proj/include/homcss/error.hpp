#pragma once

#include <stdexcept>
#include <string>

namespace homcss {

/// Base for all library errors. Each subclass maps to one C API status.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// A structural check failed (∂∂ ≠ 0, flatness, pseudomanifold, form).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Exhaustive search refused because the space exceeds the configured budget.
class BudgetError : public Error {
 public:
  BudgetError(const std::string& what, std::size_t dimension)
      : Error(what), dimension_(dimension) {}
  std::size_t dimension() const { return dimension_; }

 private:
  std::size_t dimension_;
};

/// Distance or systole requested where every cycle is trivial.
class NoNontrivialClass : public Error {
 public:
  NoNontrivialClass() : Error("no nontrivial class") {}
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace homcss
