#pragma once

#include <stdexcept>
#include <string>

namespace hcm {

/// Base class for all errors raised by the library.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An input value lies outside the contract of the operation.
class out_of_range_error : public error {
public:
  using error::error;
};

/// Alphabet size smaller than 2.
class bad_alphabet_error : public error {
public:
  using error::error;
};

/// Incrementing a word whose last digit is already the largest one.
class digit_overflow_error : public error {
public:
  using error::error;
};

/// Decrementing a word whose last digit is already 0.
class digit_underflow_error : public error {
public:
  using error::error;
};

/// A point does not belong to any first-level cylinder.
class out_of_domain_error : public error {
public:
  using error::error;
};

/// An enumeration exceeded its node budget.
class budget_exceeded_error : public error {
public:
  using error::error;
};

/// A query falls inside the numerical uncertainty band of a threshold and
/// cannot be classified honestly.
class tolerance_ambiguous_error : public error {
public:
  using error::error;
};

/// Malformed textual input (rationals, coding literals, word digits).
class parse_error : public error {
public:
  using error::error;
};

} // namespace hcm
