#pragma once

#include <array>
#include <vector>

#include "hcm/coding.hpp"
#include "hcm/params.hpp"
#include "hcm/real.hpp"

namespace hcm::critical {

/// Threshold parameter for the lower-density level sets: the projection of
/// the reflected shifted lambda sequence. Enclosure of width <= tol.
RealBound t_gamma(const Params& params, const Rational& tol);

/// Threshold parameter for the upper-density level sets: the projection of
/// the theta sequence. Enclosure of width <= tol.
RealBound t_eta(const Params& params, const Rational& tol);

/// Critical value for {lower density >= a}: the level sets have positive
/// Hausdorff dimension exactly below this value. Enclosure of width <= tol.
RealBound a_critical(const Params& params, const Rational& tol);

/// Critical value for {upper density <= b}: positive dimension exactly
/// above this value. Enclosure of width <= tol.
RealBound b_critical(const Params& params, const Rational& tol);

enum class LevelSetClass {
  FullSet,
  PositiveDimension,
  UncountableCritical,
  AtMostCountable,
  Empty,
};

const char* to_string(LevelSetClass tag);

struct Classification {
  LevelSetClass tag;
  Real full_edge;      // queries at or beyond this edge give the whole set
  RealBound critical;  // enclosure of the critical value
  Real empty_edge;     // queries beyond this edge give the empty set
};

/// Classifies {lower density >= a}. Throws tolerance_ambiguous_error when a
/// falls inside the uncertainty band of the critical value; the exact
/// critical query is only answerable symbolically via classify_lower_critical.
Classification classify_lower(const Real& a, const Params& params, const Rational& tol);

/// Classifies {upper density <= b}; same ambiguity contract as classify_lower.
Classification classify_upper(const Real& b, const Params& params, const Rational& tol);

Classification classify_lower_critical(const Params& params, const Rational& tol);
Classification classify_upper_critical(const Params& params, const Rational& tol);

/// Shift-hereditary lexicographic admissibility of d for the lower-density
/// level set with boundary sequence alpha: at every index the tail must sit
/// above alpha, below the reflection of alpha, or either, depending on
/// whether the digit is 0, alphabet-1, or interior. The infinite quantifier
/// is discharged over one preperiod+period window of d.
bool admissible_gamma(const Coding& d, const Coding& alpha, const Params& params);

/// Two-sided variant for the upper-density level set: every tail (including
/// d itself) must sit above alpha or below its reflection.
bool admissible_eta(const Coding& d, const Coding& alpha, const Params& params);

/// Transition matrix of the four-state block shift used for the dimension
/// lower bound. States 0..3 are the blocks xi, zeta and their reflections;
/// entry [i][j] = 1 when block j may follow block i.
const std::array<std::array<int, 4>, 4>& sft_adjacency();

/// The four state blocks at doubling level n (each of length 2^n):
/// {reflected lambda block, reflected next lambda block, their reflections}.
std::array<Word, 4> sft_states(int n, const Params& params);

/// Spectral radius of the adjacency matrix, computed by power iteration
/// (not hardcoded). Equals the golden ratio.
Real sft_spectral_radius();

/// Dimension lower bound log(spectral radius) / (-2^n log ratio).
Real sft_dim_lower_bound(int n, const Params& params);

struct TableRow {
  int alphabet;
  Rational ratio;
  Real lower_typical; // (2*stride/ratio)^{-s}
  Real a_c;
  Real lower_max;     // (2*stride/ratio - 2)^{-s}
  Real upper_min;     // 2^{-s}
  Real b_c;
};

std::vector<TableRow> critical_table(const std::vector<Params>& instances, const Rational& tol);

} // namespace hcm::critical
