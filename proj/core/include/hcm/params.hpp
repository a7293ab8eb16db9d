#pragma once

#include "hcm/rational.hpp"
#include "hcm/real.hpp"

namespace hcm {

/// Instance parameters of the homogeneous Cantor construction: `alphabet`
/// maps of exact rational contraction `ratio`, left endpoints spaced by
/// `stride` = (1-ratio)/(alphabet-1), so (alphabet-1)*stride + ratio = 1.
/// The similarity dimension is log(alphabet)/-log(ratio).
///
/// Only ratios in (0, 1/alphabet^2] are accepted; the density formulas this
/// library implements do not cover larger ratios.
class Params {
public:
  Params(int alphabet, Rational ratio, unsigned precision_bits = kDefaultPrecisionBits);

  int alphabet() const { return alphabet_; }
  const Rational& ratio() const { return ratio_; }
  const Rational& stride() const { return stride_; }
  /// stride/ratio, the expansion factor between consecutive levels.
  Rational stride_ratio() const { return stride_ / ratio_; }
  unsigned precision_bits() const { return precision_bits_; }

  /// Similarity dimension, evaluated at the instance precision. Always in
  /// (0, 1/2] for admissible ratios.
  const Real& dimension() const { return dimension_; }

private:
  int alphabet_;
  Rational ratio_;
  Rational stride_;
  unsigned precision_bits_;
  Real dimension_;
};

} // namespace hcm
