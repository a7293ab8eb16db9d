#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include "hcm/rational.hpp"

namespace hcm {

/// Variable-precision floating point. The working precision is whatever
/// Real::default_precision() is at the moment a value is created; public
/// operations pin it through PrecisionGuard.
using Real = boost::multiprecision::mpfr_float;

inline constexpr unsigned kDefaultPrecisionBits = 128;

unsigned bits_to_digits10(unsigned bits);

/// Scoped override of the working precision, in significant bits.
class PrecisionGuard {
public:
  explicit PrecisionGuard(unsigned bits);
  ~PrecisionGuard();
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
  unsigned saved_digits10_;
};

/// Two-sided bound lo <= value <= hi on a real quantity.
struct RealBound {
  Real lo;
  Real hi;

  Real mid() const { return (lo + hi) / 2; }
  Real width() const { return hi - lo; }
  bool contains(const Real& x) const { return lo <= x && x <= hi; }
};

/// Conversion at the current working precision. Always convert through
/// these: initializing Real straight from a rational expression template
/// bypasses the precision machinery and yields unusable numbers.
Real to_real(const Rational& value);
Real to_real(const Int& value);

} // namespace hcm
