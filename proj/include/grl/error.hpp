#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace grl {

// Base for every error raised by the library. The CLI maps these to exit code 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Domain/codomain or context mismatch between composed or compared values.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Ill-sorted formula, wiring block, or argument list.
class SortError : public Error {
 public:
  using Error::Error;
};

// An enumeration or search guard was exceeded.
class LimitError : public Error {
 public:
  using Error::Error;
};

// A rewrite rule or construction was applied without its precondition holding.
class PreconditionError : public Error {
 public:
  PreconditionError(std::string rule, const std::string& what)
      : Error(rule + ": " + what), rule_(std::move(rule)) {}
  const std::string& rule() const noexcept { return rule_; }

 private:
  std::string rule_;
};

// Theory DSL / formula text diagnostics, with 1-based source location.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace grl
