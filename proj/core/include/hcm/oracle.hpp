#pragma once

#include <cstdint>
#include <vector>

#include "hcm/measure.hpp"
#include "hcm/params.hpp"

namespace hcm::oracle {

inline constexpr std::uint64_t kDefaultNodeBudget = 1u << 22;

/// Brute-force ball mass by cylinder counting at a fixed depth:
/// inside/alphabet^depth <= mu(ball) <= (inside+straddling)/alphabet^depth.
struct CylinderCover {
  int depth;
  Int inside;
  Int straddling;

  measure::MeasureValue to_measure(const Params& params) const;
};

/// Counts depth-level cylinders fully inside / straddling the open ball
/// (x-r, x+r). Subtrees entirely inside or outside are pruned in O(1).
/// Throws budget_exceeded_error if the pruned walk still visits more than
/// node_budget nodes.
CylinderCover ball_cover(const Rational& x, const Rational& r, int depth,
                         const Params& params,
                         std::uint64_t node_budget = kDefaultNodeBudget);

/// Scan approximation of the lower density: minimum density ratio over the
/// proof-derived optimizing radii of scales n_min..n_max plus a log-uniform
/// grid of `grid` radii per scale. Cylinder depth is scale + depth_margin.
RealBound lower_density_scan(const Point& x, const Params& params, int n_min = 4,
                             int n_max = 12, int grid = 32, int depth_margin = 18);

/// Mirror scan for the upper density (maximum over the attainment radii of
/// the upper bound cases plus the grid).
RealBound upper_density_scan(const Point& x, const Params& params, int n_min = 4,
                             int n_max = 12, int grid = 32, int depth_margin = 18);

/// Formula densities over random periodic codings of the given depth.
struct TypicalStats {
  std::vector<Real> lower;
  std::vector<Real> upper;
  Real lower_target;
  Real upper_target;

  Real median_lower() const;
  Real median_upper() const;
  double fraction_lower_within(const Real& delta) const;
  double fraction_upper_within(const Real& delta) const;
};

/// Draws `points` uniform random period words of length `depth`, extends
/// them periodically and evaluates the closed-form densities. Deterministic
/// for a fixed seed.
TypicalStats sample_typical(const Params& params, int points, int depth,
                            std::uint64_t seed);

} // namespace hcm::oracle
