#pragma once

#include <cstdint>
#include <optional>

#include "hcm/coding.hpp"
#include "hcm/params.hpp"
#include "hcm/rational.hpp"
#include "hcm/real.hpp"

namespace hcm {

/// A point of the attractor given by its coding together with the exact
/// rational value of the projection map.
struct Point {
  Coding coding;
  Rational value;

  Point(Coding c, const Params& params);
};

namespace measure {

/// Mass of the uniform self-similar measure on a set: an exact rational when
/// the computation terminated, and always a rigorous enclosure lo <= mu <= hi.
struct MeasureValue {
  std::optional<Rational> exact;
  Rational lo;
  Rational hi;

  static MeasureValue exactly(Rational value);
  static MeasureValue between(Rational lo, Rational hi);

  Rational width() const { return hi - lo; }
};

/// Projection of a coding: stride * sum digit_i ratio^{i-1}, evaluated in
/// closed form (finite preperiod sum plus geometric period sum). In [0, 1].
Rational project(const Coding& coding, const Params& params);

/// First n_terms digits of the coding of the smallest attractor point >= t.
/// Throws out_of_range_error unless 0 <= t <= 1.
Word greedy_coding(const Rational& t, const Params& params, std::size_t n_terms);

/// mu([0, t]), clamping t outside [0, 1]. The digit recursion stops exactly
/// on gaps and on revisited orbit states (which covers every eventually
/// periodic point); otherwise it truncates once the enclosure width drops
/// below tol.
MeasureValue cdf(const Rational& t, const Params& params, const Rational& tol);

/// Closed-form mu([0, pi(coding)]) = sum digit_i / alphabet^i.
Rational cdf_exact(const Coding& coding, const Params& params);

/// mu((x-r, x+r)) as a CDF difference; the measure has no atoms, so the
/// open/closed distinction carries no mass.
MeasureValue ball_measure(const Rational& x, const Rational& r, const Params& params,
                          const Rational& tol);

/// Enclosure of mu(B(x,r)) / (2r)^s.
RealBound density_ratio(const Rational& x, const Rational& r, const Params& params,
                        const Rational& tol);

/// Samples t in [0,1] and checks (ratio/stride)^s * t^s <= mu([0,t]) <= t^s
/// together with the mirrored bounds for mu([t,1]). Enclosures are used
/// skeptically: only a certain violation fails the check.
bool check_cdf_bounds(const Params& params, int samples, std::uint64_t seed = 1);

/// Samples t in [0,1] and every digit i, checking that
/// cdf(i*stride + ratio*t) and i/alphabet + cdf(t)/alphabet agree within the
/// combined enclosure widths.
bool check_self_similarity(const Params& params, int samples, std::uint64_t seed = 1);

} // namespace measure
} // namespace hcm
