#include "hcm/oracle.hpp"

#include <algorithm>

#include "hcm/densities.hpp"
#include "hcm/errors.hpp"

namespace hcm::oracle {
namespace {

struct ScanRadius {
  int scale;
  Rational r;
};

// Dyadic stand-in for ratio^(scale + j/grid); the scan only needs probe
// radii, not exact ones.
Rational dyadic_power(const Params& params, int scale, int j, int grid) {
  PrecisionGuard guard(params.precision_bits());
  Real value = pow(to_real(params.ratio()), Real(scale) + Real(j) / grid);
  Real scaled = ldexp(value, 64);
  Int num(scaled.convert_to<boost::multiprecision::mpz_int>());
  if (num <= 0) num = 1;
  return Rational(num, Int(1) << 64);
}

std::vector<ScanRadius> grid_radii(int n_min, int n_max, int grid, const Params& params) {
  std::vector<ScanRadius> radii;
  for (int n = n_min; n <= n_max; ++n)
    for (int j = 0; j < grid; ++j) radii.push_back({n, dyadic_power(params, n, j, grid)});
  return radii;
}

RealBound scan(const Point& x, std::vector<ScanRadius> radii, const Params& params,
               int depth_margin, bool take_max) {
  PrecisionGuard guard(params.precision_bits());
  const Real& s = params.dimension();
  bool first = true;
  RealBound result{Real(0), Real(0)};
  for (const auto& [scale, r] : radii) {
    if (r <= 0) continue;
    CylinderCover cover = ball_cover(x.value, r, scale + depth_margin, params);
    measure::MeasureValue mass = cover.to_measure(params);
    Real denom = pow(to_real(2 * r), s);
    Real lo = to_real(mass.lo) / denom;
    Real hi = to_real(mass.hi) / denom;
    bool better = first || (take_max ? hi > result.hi : lo < result.lo);
    if (better) result = RealBound{lo, hi};
    first = false;
  }
  if (first) throw out_of_range_error("empty scan window");
  return result;
}

void check_window(int n_min, int n_max, int grid) {
  if (n_min < 1 || n_max < n_min) throw out_of_range_error("bad scan window");
  if (grid < 0) throw out_of_range_error("grid must be nonnegative");
}

} // namespace

measure::MeasureValue CylinderCover::to_measure(const Params& params) const {
  Int total = ipow(Int(params.alphabet()), static_cast<unsigned>(depth));
  return measure::MeasureValue::between(Rational(inside, total),
                                        Rational(inside + straddling, total));
}

CylinderCover ball_cover(const Rational& x, const Rational& r, int depth,
                         const Params& params, std::uint64_t node_budget) {
  if (r <= 0) throw out_of_range_error("ball radius must be positive");
  if (depth < 1) throw out_of_range_error("depth must be at least 1");
  const int N = params.alphabet();
  const Rational& rho = params.ratio();
  const Rational& R = params.stride();

  std::vector<Rational> length(depth + 1); // cylinder length per level
  length[0] = 1;
  for (int i = 1; i <= depth; ++i) length[i] = length[i - 1] * rho;
  std::vector<Int> subtree(depth + 1); // cylinders of full depth below a level
  subtree[depth] = 1;
  for (int i = depth - 1; i >= 0; --i) subtree[i] = subtree[i + 1] * N;

  const Rational ball_lo = x - r;
  const Rational ball_hi = x + r;
  CylinderCover cover{depth, Int(0), Int(0)};
  std::uint64_t visited = 0;

  struct Node {
    int level;
    Rational left;
  };
  std::vector<Node> stack{{0, Rational(0)}};
  while (!stack.empty()) {
    if (++visited > node_budget)
      throw budget_exceeded_error("cylinder enumeration exceeded its node budget");
    Node node = std::move(stack.back());
    stack.pop_back();
    Rational right = node.left + length[node.level];
    if (right <= ball_lo || node.left >= ball_hi) continue;
    if (node.left > ball_lo && right < ball_hi) {
      cover.inside += subtree[node.level];
      continue;
    }
    if (node.level == depth) {
      cover.straddling += 1;
      continue;
    }
    Rational step = R * length[node.level];
    for (int i = 0; i < N; ++i) stack.push_back({node.level + 1, node.left + i * step});
  }
  return cover;
}

RealBound lower_density_scan(const Point& x, const Params& params, int n_min,
                             int n_max, int grid, int depth_margin) {
  check_window(n_min, n_max, grid);
  std::vector<ScanRadius> radii = grid_radii(n_min, n_max, grid, params);
  // Radii at which the scale-n lower bound is attained.
  for (int n = n_min; n <= n_max; ++n) {
    Rational orbit = measure::project(x.coding.shifted(n), params);
    Rational r = rational_pow(params.ratio(), n) * (params.stride() - densities::s_map(orbit, params));
    radii.push_back({n, r});
  }
  return scan(x, std::move(radii), params, depth_margin, false);
}

RealBound upper_density_scan(const Point& x, const Params& params, int n_min,
                             int n_max, int grid, int depth_margin) {
  check_window(n_min, n_max, grid);
  std::vector<ScanRadius> radii = grid_radii(n_min, n_max, grid, params);
  // Radii at which the three scale-n upper bound branches are attained.
  for (int n = n_min; n <= n_max; ++n) {
    Rational pw = rational_pow(params.ratio(), n);
    Rational orbit = measure::project(x.coding.shifted(n), params);
    Rational next_orbit = measure::project(x.coding.shifted(n + 1), params);
    Rational mirrored = 1 - next_orbit;
    Rational next_eta = next_orbit > mirrored ? next_orbit : mirrored;
    int hat = densities::hat_digit(x.coding.digit_at(n), params);
    radii.push_back({n, pw * params.ratio() * next_eta});
    radii.push_back({n, pw * (hat * params.stride() + params.ratio() * next_eta)});
    Rational orbit_mirrored = 1 - orbit;
    radii.push_back({n, pw * (orbit > orbit_mirrored ? orbit : orbit_mirrored)});
  }
  return scan(x, std::move(radii), params, depth_margin, true);
}

Real TypicalStats::median_lower() const {
  std::vector<Real> sorted = lower;
  std::sort(sorted.begin(), sorted.end());
  return sorted[sorted.size() / 2];
}

Real TypicalStats::median_upper() const {
  std::vector<Real> sorted = upper;
  std::sort(sorted.begin(), sorted.end());
  return sorted[sorted.size() / 2];
}

double TypicalStats::fraction_lower_within(const Real& delta) const {
  std::size_t hits = 0;
  for (const Real& v : lower)
    if (abs(v - lower_target) <= delta) ++hits;
  return static_cast<double>(hits) / static_cast<double>(lower.size());
}

double TypicalStats::fraction_upper_within(const Real& delta) const {
  std::size_t hits = 0;
  for (const Real& v : upper)
    if (abs(v - upper_target) <= delta) ++hits;
  return static_cast<double>(hits) / static_cast<double>(upper.size());
}

TypicalStats sample_typical(const Params& params, int points, int depth, std::uint64_t seed) {
  if (points < 1) throw out_of_range_error("need at least one point");
  if (depth < 1) throw out_of_range_error("depth must be at least 1");
  PrecisionGuard guard(params.precision_bits());
  std::mt19937_64 rng(seed);
  TypicalStats stats;
  stats.lower.reserve(points);
  stats.upper.reserve(points);
  densities::TypicalValues targets = densities::typical_values(params);
  stats.lower_target = targets.lower;
  stats.upper_target = targets.upper;
  for (int i = 0; i < points; ++i) {
    std::vector<int> digits(depth);
    for (int& d : digits) d = random_digit(rng, params.alphabet());
    Point x(Coding::periodic(Word(std::move(digits))), params);
    densities::DensityReport rep = densities::report(x, params);
    stats.lower.push_back(rep.lower);
    stats.upper.push_back(rep.upper);
  }
  return stats;
}

} // namespace hcm::oracle
