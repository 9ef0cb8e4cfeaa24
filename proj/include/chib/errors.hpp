#pragma once

#include <stdexcept>
#include <string>

namespace chib {

// Malformed or out-of-contract arguments (bad vertex ids, overlapping sets, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Graph or structure files that do not follow their format.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, long line = -1)
      : InputError(line >= 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  long line() const noexcept { return line_; }

 private:
  long line_;
};

// A theorem hypothesis that an engine checked and found false.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown only inside engines; solvers report exhaustion through their result types.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace chib
