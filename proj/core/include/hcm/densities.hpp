#pragma once

#include <cstddef>

#include "hcm/measure.hpp"
#include "hcm/params.hpp"

namespace hcm::densities {

/// Orbit quantity driving the lower density: the distance-to-gap score of
/// the n-th orbit point, folded by the n-th digit (n is 1-based).
Rational gamma_n(const Point& x, std::size_t n, const Params& params);

/// max(orbit value, 1 - orbit value) at step n; always >= 1/2.
Rational eta_n(const Point& x, std::size_t n, const Params& params);

/// min(digit, alphabet-1-digit): distance of a digit from the alphabet edge.
int hat_digit(int digit, const Params& params);

/// Distance from x to the far end of the gap pattern around its first-level
/// cylinder; throws out_of_domain_error when x lies in no cylinder.
Rational s_map(const Rational& x, const Params& params);

/// max(k*stride + ratio - x, x - k*stride) for x in cylinder k.
Rational m_map(int k, const Rational& x, const Params& params);

/// Witness of the limsup branch of the upper density.
struct UpperWitness {
  std::size_t period_offset; // index into the recurrent window, 0-based
  int hat_digit;
  Rational eta;
};

struct DensityReport {
  Real lower;
  Real upper;
  Rational gamma_liminf;
  Rational eta_liminf;
  Real liminf_branch; // (2 * eta_liminf)^{-s}
  Real limsup_branch; // max over the window of the digit-weighted quotient
  UpperWitness witness;
};

/// Exact liminf/limsup evaluation over one full period past the preperiod.
/// Accepts eventually periodic codings only (which Point guarantees).
DensityReport report(const Point& x, const Params& params);

Real lower_density(const Point& x, const Params& params);
Real upper_density(const Point& x, const Params& params);

struct TypicalValues {
  Real lower; // (2*stride/ratio)^{-s}
  Real upper; // 1 for odd alphabets, (alphabet*stride)^{-s} for even ones
};

/// Almost-everywhere values of the two densities.
TypicalValues typical_values(const Params& params);

/// Exact s-dimensional packing measure of the attractor, (2*stride/ratio)^s.
Real packing_measure(const Params& params);

struct DensityBounds {
  Real lower_min; // (2*stride/ratio)^{-s}
  Real lower_max; // (2*stride/ratio - 2)^{-s}
  Real upper_min; // 2^{-s}
  Real upper_max; // 1, refined to (alphabet*stride)^{-s} for even alphabets
};

/// Global bounds valid at every point: lower_min <= lower density <=
/// lower_max < upper_min <= upper density <= upper_max.
DensityBounds density_bounds(const Params& params);

} // namespace hcm::densities
