#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mdpconv {

// Base class of every error thrown by this library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// A value that was required to be prime is not.
class NotPrimeError : public Error {
  public:
    explicit NotPrimeError(std::uint64_t value)
        : Error("not a prime: " + std::to_string(value)) {}
};

// Requested field or matrix exceeds the exact-arithmetic size budget.
class SizeBudgetError : public Error {
  public:
    using Error::Error;
};

// Inverse or division by the zero element.
class DivisionByZeroError : public Error {
  public:
    DivisionByZeroError() : Error("division by zero") {}
    using Error::Error;
};

// Operands belong to different field instances.
class FieldMismatchError : public Error {
  public:
    FieldMismatchError() : Error("operands belong to different fields") {}
};

// A work budget (enumeration, minors, weight evaluations, ...) would be
// exceeded.  Budgets are never silently truncated; callers may raise them.
class BudgetExceededError : public Error {
  public:
    BudgetExceededError(const std::string& budget_name, std::uint64_t limit,
                        std::uint64_t required)
        : Error("budget '" + budget_name + "' exceeded: need " +
                std::to_string(required) + ", limit " + std::to_string(limit)),
          budget_name_(budget_name), limit_(limit), required_(required) {}

    const std::string& budget_name() const { return budget_name_; }
    std::uint64_t limit() const { return limit_; }
    std::uint64_t required() const { return required_; }

  private:
    std::string budget_name_;
    std::uint64_t limit_;
    std::uint64_t required_;
};

// Malformed descriptor or report JSON; carries a JSON pointer to the
// offending field.
class SchemaError : public Error {
  public:
    SchemaError(const std::string& pointer, const std::string& what_failed)
        : Error("schema error at '" + pointer + "': " + what_failed),
          pointer_(pointer) {}

    const std::string& pointer() const { return pointer_; }

  private:
    std::string pointer_;
};

// A matrix that was required to have full rank does not (e.g. the constant
// generator coefficient in the column-distance definition, or a kernel basis
// that cannot supply enough independent rows).
class RankDeficiencyError : public Error {
  public:
    using Error::Error;
};

// Operation requires a verified maximum-distance-profile code.
class NotMdpError : public Error {
  public:
    NotMdpError() : Error("code is not MDP") {}
};

// Everything else: bad indices, invalid parameter combinations, ...
class InvalidArgumentError : public Error {
  public:
    using Error::Error;
};

}  // namespace mdpconv
