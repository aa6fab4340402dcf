#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pgv {

// Malformed textual input. Line and column are 1-based; 0 means "unknown".
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// A configured resource budget would be exceeded by the requested work.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::string budget, std::string needed, std::string limit)
      : std::runtime_error(budget + " exceeded: need " + needed + ", limit " + limit),
        budget_(std::move(budget)) {}

  const std::string& budget() const { return budget_; }

 private:
  std::string budget_;
};

// A structural fact that must hold by theory failed on computed data.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pgv
