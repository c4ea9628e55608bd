#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chaincodes {

/// Operands belong to different rings, or dimensions disagree.
class SpecMismatch : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Inverse requested for an element of the maximal ideal.
class NotAUnit : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// n does not divide q - 1, so no primitive n-th root of unity exists.
class OrderNotCompatible : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// The residue is not a simple root of x^n - 1, so Newton lifting is undefined.
class NotSimpleRoot : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Substitution value is not an n-th root of unity.
class RootOrderViolation : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Instance exceeds an explicitly configured enumeration budget.
class BudgetExceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Internal inconsistency: a generator promised by the theory has no witness.
class WitnessNotFound : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// Text input rejected; `column` is 1-based within `line`.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : std::runtime_error(what), line(line), column(column) {}
    std::size_t line;
    std::size_t column;
};

} // namespace chaincodes
