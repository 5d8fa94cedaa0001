#pragma once

#include <stdexcept>
#include <string>

namespace tarb {

// Malformed input text. `line` is 1-based; 0 when no line applies.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// An exhaustive search refused to run because its search space exceeds the
// configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, long long subject)
      : std::runtime_error(what), subject_(subject) {}
  // The root (enumeration) or vertex count (vertex cover) that tripped the guard.
  long long subject() const { return subject_; }

 private:
  long long subject_;
};

}  // namespace tarb
