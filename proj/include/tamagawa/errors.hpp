#pragma once

#include <map>
#include <stdexcept>
#include <string>

namespace tamagawa {

using ErrorContext = std::map<std::string, std::string>;

// Base for every library error. `code()` is a stable machine-readable tag that
// the CLI maps onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message, ErrorContext context = {})
      : std::runtime_error(message), code_(std::move(code)), context_(std::move(context)) {}

  const std::string& code() const noexcept { return code_; }
  const ErrorContext& context() const noexcept { return context_; }

 private:
  std::string code_;
  ErrorContext context_;
};

// Malformed input data: group tables, subgroups, torus data.
class ConstructionError : public Error {
 public:
  explicit ConstructionError(const std::string& message, ErrorContext context = {})
      : Error("datum_invalid", message, std::move(context)) {}
};

// A well-formed request outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& message, ErrorContext context = {})
      : Error("domain", message, std::move(context)) {}
};

class FastPathUnavailable : public Error {
 public:
  explicit FastPathUnavailable(const std::string& message, ErrorContext context = {})
      : Error("fast_path_unavailable", message, std::move(context)) {}
};

class BudgetError : public Error {
 public:
  explicit BudgetError(const std::string& message, ErrorContext context = {})
      : Error("budget", message, std::move(context)) {}
};

class RangeError : public Error {
 public:
  explicit RangeError(const std::string& message, ErrorContext context = {})
      : Error("overflow", message, std::move(context)) {}
};

class ShortageError : public Error {
 public:
  explicit ShortageError(const std::string& message, ErrorContext context = {})
      : Error("shortage", message, std::move(context)) {}
};

// A computed invariant that must hold did not. Always a bug.
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& message, ErrorContext context = {})
      : Error("internal", message, std::move(context)) {}
};

}  // namespace tamagawa
