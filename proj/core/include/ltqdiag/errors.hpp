#pragma once

#include <stdexcept>
#include <string>

namespace ltqdiag {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A caller-supplied argument violates an operation's precondition
// (dimension out of range, invalid vertex, equal sets, ...).
class ArgumentError : public Error {
 public:
  explicit ArgumentError(const std::string& what) : Error(what) {}
};

// An exhaustive search would enumerate more candidates than the configured
// budget allows.
class BudgetError : public Error {
 public:
  explicit BudgetError(const std::string& what) : Error(what) {}
};

}  // namespace ltqdiag
