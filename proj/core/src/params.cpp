#include "hcm/params.hpp"

#include "hcm/errors.hpp"

namespace hcm {

Params::Params(int alphabet, Rational ratio, unsigned precision_bits)
    : alphabet_(alphabet), ratio_(std::move(ratio)), precision_bits_(precision_bits) {
  if (alphabet_ < 2) throw bad_alphabet_error("alphabet must have at least 2 digits");
  if (precision_bits_ < 8) throw out_of_range_error("precision must be at least 8 bits");
  Rational limit(1, Int(alphabet_) * alphabet_);
  if (ratio_ <= 0 || ratio_ > limit)
    throw out_of_range_error("ratio must lie in (0, 1/alphabet^2]; larger ratios are unsupported");
  stride_ = (1 - ratio_) / (alphabet_ - 1);
  PrecisionGuard guard(precision_bits_);
  dimension_ = log(Real(alphabet_)) / -log(to_real(ratio_));
}

} // namespace hcm
