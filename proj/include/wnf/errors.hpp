#pragma once

#include <stdexcept>
#include <string>

namespace wnf {

// Parse failure; position is a 0-based offset into the input text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  size_t position() const { return position_; }

 private:
  size_t position_;
};

class UnknownGeneratorError : public ParseError {
 public:
  UnknownGeneratorError(const std::string& name, size_t position)
      : ParseError("unknown generator '" + name + "'", position), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

// Rewriting or multiplication exceeded the configured budget. Budgets are
// hard errors; results are never silently truncated.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// A precondition on the algebraic domain was violated (wrong alphabet,
// element outside the expected subalgebra, and so on).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wnf
