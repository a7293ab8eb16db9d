#include "hcm/real.hpp"

#include <cmath>

namespace hcm {

unsigned bits_to_digits10(unsigned bits) {
  auto digits = static_cast<unsigned>(std::ceil(bits * 0.3010299956639812));
  return digits < 2 ? 2 : digits;
}

PrecisionGuard::PrecisionGuard(unsigned bits) : saved_digits10_(Real::default_precision()) {
  Real::default_precision(bits_to_digits10(bits));
}

PrecisionGuard::~PrecisionGuard() {
  Real::default_precision(saved_digits10_);
}

Real to_real(const Rational& value) {
  return Real(value);
}

Real to_real(const Int& value) {
  return Real(value);
}

} // namespace hcm
