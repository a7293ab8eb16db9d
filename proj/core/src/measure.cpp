#include "hcm/measure.hpp"

#include <map>
#include <utility>

#include "hcm/errors.hpp"

namespace hcm {

Point::Point(Coding c, const Params& params) : coding(std::move(c)), value(0) {
  validate_digits(coding.preperiod(), params.alphabet());
  validate_digits(coding.period(), params.alphabet());
  value = measure::project(coding, params);
}

namespace measure {

MeasureValue MeasureValue::exactly(Rational value) {
  MeasureValue m;
  m.lo = value;
  m.hi = value;
  m.exact = std::move(value);
  return m;
}

MeasureValue MeasureValue::between(Rational lo, Rational hi) {
  MeasureValue m;
  if (lo == hi) return exactly(std::move(lo));
  m.lo = std::move(lo);
  m.hi = std::move(hi);
  return m;
}

Rational project(const Coding& coding, const Params& params) {
  const Rational& rho = params.ratio();
  Rational acc(0), power(1);
  for (int d : coding.preperiod()) {
    acc += d * power;
    power *= rho;
  }
  Rational block(0), block_power(1);
  for (int d : coding.period()) {
    block += d * block_power;
    block_power *= rho;
  }
  // block_power is now rho^q, so the periodic tail sums to block/(1-rho^q).
  acc += power * block / (1 - block_power);
  return params.stride() * acc;
}

Word greedy_coding(const Rational& t, const Params& params, std::size_t n_terms) {
  if (t < 0 || t > 1) throw out_of_range_error("greedy coding needs t in [0, 1]");
  const Rational& rho = params.ratio();
  const Rational& R = params.stride();
  int N = params.alphabet();
  std::vector<int> digits;
  digits.reserve(n_terms);
  Rational cur = t;
  bool zeros = cur <= 0;
  while (digits.size() < n_terms) {
    if (zeros) {
      digits.push_back(0);
      continue;
    }
    // Least digit k whose cylinder reaches cur, i.e. cur <= k*R + rho.
    Int k = rational_ceil((cur - rho) / R);
    if (k < 0) k = 0;
    if (k > N - 1) k = N - 1;
    int digit = static_cast<int>(k);
    digits.push_back(digit);
    if (cur <= digit * R) {
      zeros = true; // the smallest point of cylinder `digit` already covers t
    } else {
      cur = (cur - digit * R) / rho;
      zeros = cur <= 0;
    }
  }
  return Word(std::move(digits));
}

MeasureValue cdf(const Rational& t, const Params& params, const Rational& tol) {
  if (tol <= 0) throw out_of_range_error("tolerance must be positive");
  if (t <= 0) return MeasureValue::exactly(Rational(0));
  if (t >= 1) return MeasureValue::exactly(Rational(1));

  const Rational& rho = params.ratio();
  const Rational& R = params.stride();
  const int N = params.alphabet();

  // Depth at which the remaining mass uncertainty 1/N^depth drops below tol.
  int max_depth = 1;
  Rational resolution(1, N);
  while (resolution > tol) {
    resolution /= N;
    ++max_depth;
  }

  Rational acc(0);          // mass fully below the current rescaled state
  Rational scale(1);        // 1/N^depth
  Rational cur = t;
  std::map<Rational, std::pair<Rational, Rational>> seen; // state -> (acc, scale)

  for (int depth = 0; depth < max_depth; ++depth) {
    Int j = rational_floor(cur / R);
    if (j > N - 1) j = N - 1;
    int digit = static_cast<int>(j);
    if (cur >= digit * R + rho) {
      // Gap (or cylinder right endpoint): all mass up to digit+1 included.
      return MeasureValue::exactly(acc + scale * Rational(digit + 1, N));
    }
    acc += scale * Rational(digit, N);
    scale /= N;
    cur = (cur - digit * R) / rho;
    if (cur <= 0) return MeasureValue::exactly(acc);
    if (cur >= 1) return MeasureValue::exactly(acc + scale);
    auto [it, inserted] = seen.emplace(cur, std::make_pair(acc, scale));
    if (!inserted) {
      // Revisited orbit state: mu([0, state]) solves a one-step fixpoint.
      const auto& [acc0, scale0] = it->second;
      Rational rem = (acc - acc0) / (scale0 - scale);
      return MeasureValue::exactly(acc0 + scale0 * rem);
    }
  }
  return MeasureValue::between(acc, acc + scale);
}

Rational cdf_exact(const Coding& coding, const Params& params) {
  const int N = params.alphabet();
  Rational acc(0), power(1, N);
  for (int d : coding.preperiod()) {
    acc += d * power;
    power /= N;
  }
  Rational block(0), block_power(1);
  for (int d : coding.period()) {
    block_power /= N;
    block += d * block_power;
  }
  acc += power * N * block / (1 - block_power);
  return acc;
}

MeasureValue ball_measure(const Rational& x, const Rational& r, const Params& params,
                          const Rational& tol) {
  if (r <= 0) throw out_of_range_error("ball radius must be positive");
  MeasureValue right = cdf(x + r, params, tol);
  MeasureValue left = cdf(x - r, params, tol);
  if (right.exact && left.exact)
    return MeasureValue::exactly(*right.exact - *left.exact);
  Rational lo = right.lo - left.hi;
  Rational hi = right.hi - left.lo;
  if (lo < 0) lo = 0;
  if (hi > 1) hi = 1;
  return MeasureValue::between(std::move(lo), std::move(hi));
}

RealBound density_ratio(const Rational& x, const Rational& r, const Params& params,
                        const Rational& tol) {
  MeasureValue mass = ball_measure(x, r, params, tol);
  PrecisionGuard guard(params.precision_bits());
  Real denom = pow(to_real(2 * r), params.dimension());
  return RealBound{to_real(mass.lo) / denom, to_real(mass.hi) / denom};
}

namespace {

// Skeptical slack absorbing the floating-point rounding of the s-powers;
// far below every tolerance used by callers.
const Real& fp_slack() {
  static const Real slack = []() {
    PrecisionGuard guard(kDefaultPrecisionBits);
    return Real(ldexp(Real(1), -96));
  }();
  return slack;
}

} // namespace

bool check_cdf_bounds(const Params& params, int samples, std::uint64_t seed) {
  if (samples < 1) throw out_of_range_error("need at least one sample");
  PrecisionGuard guard(params.precision_bits());
  std::mt19937_64 rng(seed);
  const Real s = params.dimension();
  const Real ratio_pow = pow(to_real(params.ratio() / params.stride()), s);
  const Rational tol(1, ipow(Int(10), 18));

  auto holds_at = [&](const Rational& t) {
    MeasureValue head = cdf(t, params, tol);
    Real tpow = t == 0 ? Real(0) : pow(to_real(t), s);
    if (to_real(head.hi) < ratio_pow * tpow - fp_slack()) return false;
    if (to_real(head.lo) > tpow + fp_slack()) return false;
    // Mirrored bounds for the tail mass mu([t,1]) = 1 - mu([0,t]).
    Rational one_minus = 1 - t;
    Real mpow = one_minus == 0 ? Real(0) : pow(to_real(one_minus), s);
    if (to_real(1 - head.lo) < ratio_pow * mpow - fp_slack()) return false;
    if (to_real(1 - head.hi) > mpow + fp_slack()) return false;
    return true;
  };

  if (!holds_at(Rational(0)) || !holds_at(Rational(1))) return false;
  for (int i = 0; i < samples; ++i)
    if (!holds_at(random_unit_rational(rng))) return false;
  return true;
}

bool check_self_similarity(const Params& params, int samples, std::uint64_t seed) {
  if (samples < 1) throw out_of_range_error("need at least one sample");
  std::mt19937_64 rng(seed);
  const int N = params.alphabet();
  const Rational tol(1, ipow(Int(10), 15));

  auto consistent = [&](const Rational& t) {
    MeasureValue inner = cdf(t, params, tol);
    for (int digit = 0; digit < N; ++digit) {
      MeasureValue outer = cdf(digit * params.stride() + params.ratio() * t, params, tol);
      Rational lo = Rational(digit, N) + inner.lo / N;
      Rational hi = Rational(digit, N) + inner.hi / N;
      if (outer.hi < lo || outer.lo > hi) return false;
    }
    return true;
  };

  if (!consistent(Rational(0)) || !consistent(Rational(1))) return false;
  for (int i = 0; i < samples; ++i)
    if (!consistent(random_unit_rational(rng))) return false;
  return true;
}

} // namespace measure
} // namespace hcm
