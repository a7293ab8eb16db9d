#include "hcm/critical.hpp"

#include <algorithm>

#include "hcm/densities.hpp"
#include "hcm/errors.hpp"
#include "hcm/thue_morse.hpp"

namespace hcm::critical {
namespace {

struct RationalBound {
  Rational lo;
  Rational hi;
  Rational width() const { return hi - lo; }
};

// sum_{i=1}^{terms} digits[i-1+offset] * ratio^{i-1}, plus the worst-case
// geometric tail (alphabet-1) * ratio^terms / (1-ratio) for the cut series.
RationalBound digit_series(const Word& digits, std::size_t offset, std::size_t terms,
                           const Params& params) {
  const Rational& rho = params.ratio();
  Rational sum(0), power(1);
  for (std::size_t i = 0; i < terms; ++i) {
    sum += digits[offset + i] * power;
    power *= rho;
  }
  Rational tail = (params.alphabet() - 1) * power / (1 - rho);
  return RationalBound{sum, sum + tail};
}

std::size_t series_length(const Params& params, const Rational& tol) {
  // Smallest K with stride * (alphabet-1) * ratio^K / (1-ratio) < tol.
  Rational bound = params.stride() * (params.alphabet() - 1) / (1 - params.ratio());
  std::size_t k = 0;
  while (bound >= tol) {
    bound *= params.ratio();
    ++k;
  }
  return std::max<std::size_t>(k, 4);
}

void check_tol(const Rational& tol) {
  if (tol <= 0) throw out_of_range_error("tolerance must be positive");
}

// Margin absorbing rational->float rounding when forming real enclosures.
Real rounding_margin() {
  return ldexp(Real(1), -100);
}

RealBound widen(const Rational& lo, const Rational& hi) {
  Real eps = rounding_margin();
  return RealBound{to_real(lo) - eps, to_real(hi) + eps};
}

RationalBound t_gamma_rational(const Params& params, const Rational& tol) {
  std::size_t terms = series_length(params, tol);
  Word lam = tm::lambda_prefix(params.alphabet(), terms + 1);
  RationalBound series = digit_series(lam, 1, terms, params); // digits lambda_{i+1}
  return RationalBound{1 - params.stride() * series.hi, 1 - params.stride() * series.lo};
}

RationalBound t_eta_rational(const Params& params, const Rational& tol) {
  std::size_t terms = series_length(params, tol);
  Word theta = tm::theta_prefix(params.alphabet(), terms);
  RationalBound series = digit_series(theta, 0, terms, params);
  return RationalBound{params.stride() * series.lo, params.stride() * series.hi};
}

// (2z)^{-s} over a rational interval; decreasing, so ends swap.
RealBound neg_power_interval(const RationalBound& z, const Params& params) {
  const Real& s = params.dimension();
  Real eps = rounding_margin();
  return RealBound{pow(to_real(2 * z.hi), -s) - eps, pow(to_real(2 * z.lo), -s) + eps};
}

// Shrinks the series tolerance until the mapped enclosure meets tol.
RealBound certified_power(const Params& params, const Rational& tol,
                          RationalBound (*inner)(const Params&, const Rational&)) {
  Rational series_tol = tol;
  for (;;) {
    RealBound out = neg_power_interval(inner(params, series_tol), params);
    if (out.width() <= to_real(tol)) return out;
    series_tol /= 16;
  }
}

RationalBound a_inner(const Params& params, const Rational& tol) {
  RationalBound tg = t_gamma_rational(params, tol);
  return RationalBound{params.stride_ratio() - tg.hi, params.stride_ratio() - tg.lo};
}

RationalBound b_inner(const Params& params, const Rational& tol) {
  return t_eta_rational(params, tol);
}

Classification make_classification(LevelSetClass tag, Real full_edge, RealBound critical,
                                   Real empty_edge) {
  return Classification{tag, std::move(full_edge), std::move(critical), std::move(empty_edge)};
}

} // namespace

RealBound t_gamma(const Params& params, const Rational& tol) {
  check_tol(tol);
  PrecisionGuard guard(params.precision_bits());
  RationalBound b = t_gamma_rational(params, tol);
  return widen(b.lo, b.hi);
}

RealBound t_eta(const Params& params, const Rational& tol) {
  check_tol(tol);
  PrecisionGuard guard(params.precision_bits());
  RationalBound b = t_eta_rational(params, tol);
  return widen(b.lo, b.hi);
}

RealBound a_critical(const Params& params, const Rational& tol) {
  check_tol(tol);
  PrecisionGuard guard(params.precision_bits());
  return certified_power(params, tol, a_inner);
}

RealBound b_critical(const Params& params, const Rational& tol) {
  check_tol(tol);
  PrecisionGuard guard(params.precision_bits());
  return certified_power(params, tol, b_inner);
}

const char* to_string(LevelSetClass tag) {
  switch (tag) {
    case LevelSetClass::FullSet: return "FullSet";
    case LevelSetClass::PositiveDimension: return "PositiveDimension";
    case LevelSetClass::UncountableCritical: return "UncountableCritical";
    case LevelSetClass::AtMostCountable: return "AtMostCountable";
    case LevelSetClass::Empty: return "Empty";
  }
  return "?";
}

Classification classify_lower(const Real& a, const Params& params, const Rational& tol) {
  check_tol(tol);
  PrecisionGuard guard(params.precision_bits());
  densities::DensityBounds bounds = densities::density_bounds(params);
  RealBound critical = a_critical(params, tol);
  if (a <= bounds.lower_min)
    return make_classification(LevelSetClass::FullSet, bounds.lower_min, critical,
                               bounds.lower_max);
  if (a > bounds.lower_max)
    return make_classification(LevelSetClass::Empty, bounds.lower_min, critical,
                               bounds.lower_max);
  if (critical.contains(a))
    throw tolerance_ambiguous_error(
        "query lies inside the uncertainty band of the critical value; "
        "use the symbolic critical query or tighten the tolerance");
  LevelSetClass tag =
      a < critical.lo ? LevelSetClass::PositiveDimension : LevelSetClass::AtMostCountable;
  return make_classification(tag, bounds.lower_min, critical, bounds.lower_max);
}

Classification classify_upper(const Real& b, const Params& params, const Rational& tol) {
  check_tol(tol);
  PrecisionGuard guard(params.precision_bits());
  densities::DensityBounds bounds = densities::density_bounds(params);
  RealBound critical = b_critical(params, tol);
  if (b < bounds.upper_min)
    return make_classification(LevelSetClass::Empty, bounds.upper_max, critical,
                               bounds.upper_min);
  if (b >= bounds.upper_max)
    return make_classification(LevelSetClass::FullSet, bounds.upper_max, critical,
                               bounds.upper_min);
  if (critical.contains(b))
    throw tolerance_ambiguous_error(
        "query lies inside the uncertainty band of the critical value; "
        "use the symbolic critical query or tighten the tolerance");
  LevelSetClass tag =
      b < critical.lo ? LevelSetClass::AtMostCountable : LevelSetClass::PositiveDimension;
  return make_classification(tag, bounds.upper_max, critical, bounds.upper_min);
}

Classification classify_lower_critical(const Params& params, const Rational& tol) {
  check_tol(tol);
  PrecisionGuard guard(params.precision_bits());
  densities::DensityBounds bounds = densities::density_bounds(params);
  return make_classification(LevelSetClass::UncountableCritical, bounds.lower_min,
                             a_critical(params, tol), bounds.lower_max);
}

Classification classify_upper_critical(const Params& params, const Rational& tol) {
  check_tol(tol);
  PrecisionGuard guard(params.precision_bits());
  densities::DensityBounds bounds = densities::density_bounds(params);
  return make_classification(LevelSetClass::UncountableCritical, bounds.upper_max,
                             b_critical(params, tol), bounds.upper_min);
}

bool admissible_gamma(const Coding& d, const Coding& alpha, const Params& params) {
  validate_digits(d.preperiod(), params.alphabet());
  validate_digits(d.period(), params.alphabet());
  const int N = params.alphabet();
  Coding alpha_bar = alpha.reflected(N);
  // The condition at index n depends only on (digit_n, tail after n), which
  // cycles once n passes the preperiod.
  std::size_t window = d.preperiod().size() + d.period().size();
  Coding tail = d;
  for (std::size_t n = 1; n <= window; ++n) {
    int digit = tail.digit_at(0);
    tail = tail.shifted(1);
    bool above = compare(tail, alpha) >= 0;
    bool below = compare(tail, alpha_bar) <= 0;
    if (digit == 0 && !above) return false;
    if (digit == N - 1 && !below) return false;
    if (digit > 0 && digit < N - 1 && !above && !below) return false;
  }
  return true;
}

bool admissible_eta(const Coding& d, const Coding& alpha, const Params& params) {
  validate_digits(d.preperiod(), params.alphabet());
  validate_digits(d.period(), params.alphabet());
  Coding alpha_bar = alpha.reflected(params.alphabet());
  std::size_t window = d.preperiod().size() + d.period().size();
  Coding tail = d;
  for (std::size_t n = 0; n <= window; ++n) {
    if (compare(tail, alpha) < 0 && compare(tail, alpha_bar) > 0) return false;
    tail = tail.shifted(1);
  }
  return true;
}

const std::array<std::array<int, 4>, 4>& sft_adjacency() {
  static const std::array<std::array<int, 4>, 4> matrix = {{
      {0, 1, 1, 0},
      {0, 0, 1, 0},
      {1, 0, 0, 1},
      {1, 0, 0, 0},
  }};
  return matrix;
}

std::array<Word, 4> sft_states(int n, const Params& params) {
  if (n < 1) throw out_of_range_error("doubling level must be at least 1");
  const int N = params.alphabet();
  std::size_t len = std::size_t{1} << n;
  Word lam = tm::lambda_prefix(N, 2 * len + 1);
  Word xi = reflect(lam.sub(1, len), N);
  Word zeta = reflect(lam.sub(len + 1, len), N);
  return {xi, zeta, reflect(xi, N), reflect(zeta, N)};
}

Real sft_spectral_radius() {
  PrecisionGuard guard(kDefaultPrecisionBits);
  const auto& A = sft_adjacency();
  std::array<Real, 4> v{Real(1), Real(1), Real(1), Real(1)};
  Real radius(0);
  for (int iter = 0; iter < 512; ++iter) {
    std::array<Real, 4> next{Real(0), Real(0), Real(0), Real(0)};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (A[i][j]) next[i] += v[j];
    Real norm(0);
    for (const Real& entry : next) norm += entry;
    Real prev(0);
    for (const Real& entry : v) prev += entry;
    radius = norm / prev;
    for (int i = 0; i < 4; ++i) v[i] = next[i] / norm;
  }
  return radius;
}

Real sft_dim_lower_bound(int n, const Params& params) {
  if (n < 1) throw out_of_range_error("doubling level must be at least 1");
  PrecisionGuard guard(params.precision_bits());
  Real radius = sft_spectral_radius();
  return log(radius) / (-to_real(Int(Int(1) << n)) * log(to_real(params.ratio())));
}

std::vector<TableRow> critical_table(const std::vector<Params>& instances, const Rational& tol) {
  check_tol(tol);
  std::vector<TableRow> rows;
  rows.reserve(instances.size());
  for (const Params& p : instances) {
    PrecisionGuard guard(p.precision_bits());
    densities::DensityBounds bounds = densities::density_bounds(p);
    rows.push_back(TableRow{p.alphabet(), p.ratio(), bounds.lower_min,
                            a_critical(p, tol).mid(), bounds.lower_max, bounds.upper_min,
                            b_critical(p, tol).mid()});
  }
  return rows;
}

} // namespace hcm::critical
