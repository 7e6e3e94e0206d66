#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gclab {

// Input outside an operation's domain: bad family parameters, an edgeless
// graph where edges are required, an infeasible Nordhaus-Gaddum triple.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed edge-list text. line() is 1-based; 0 means end of input.
class ParseError : public DomainError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : DomainError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A fixed-rule edge coloring that cannot work for the requested parameter.
// Carries the exact chromatic index of the graph so callers can report it.
class ConstructionInfeasible : public DomainError {
 public:
  ConstructionInfeasible(const std::string& what, int exact_chromatic_index)
      : DomainError(what), exact_(exact_chromatic_index) {}

  int exact_chromatic_index() const noexcept { return exact_; }

 private:
  int exact_;
};

// The exact solver ran past its node limit.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(unsigned long long budget)
      : std::runtime_error("solver budget exceeded (" + std::to_string(budget) + " nodes)"),
        budget_(budget) {}

  unsigned long long budget() const noexcept { return budget_; }

 private:
  unsigned long long budget_;
};

}  // namespace gclab
