#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bcx {

/// Malformed or out-of-range user input (bad vertex ids, non-positive times).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Edge-list text that could not be parsed. Carries the 1-based line number.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Inconsistent run or mesh configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller broke a documented precondition.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace bcx
