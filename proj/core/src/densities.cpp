#include "hcm/densities.hpp"

#include "hcm/errors.hpp"

namespace hcm::densities {
namespace {

struct OrbitStep {
  int digit;
  Rational orbit; // value of the n-step shifted point
};

OrbitStep orbit_step(const Point& x, std::size_t n, const Params& params) {
  if (n < 1) throw out_of_range_error("orbit index is 1-based");
  return OrbitStep{x.coding.digit_at(n - 1),
                   measure::project(x.coding.shifted(n), params)};
}

Rational mirror_max(const Rational& v) {
  Rational other = 1 - v;
  return v > other ? v : other;
}

Rational gamma_of(const OrbitStep& step, const Params& params) {
  const int N = params.alphabet();
  if (step.digit == 0) return step.orbit;
  if (step.digit == N - 1) return Rational(1 - step.orbit);
  return mirror_max(step.orbit);
}

Real limsup_quotient(int hat, const Rational& eta, const Params& params) {
  const Real& s = params.dimension();
  Rational inner = 2 * (hat * params.stride_ratio() + eta);
  return (1 + 2 * hat) * pow(to_real(inner), -s);
}

} // namespace

Rational gamma_n(const Point& x, std::size_t n, const Params& params) {
  return gamma_of(orbit_step(x, n, params), params);
}

Rational eta_n(const Point& x, std::size_t n, const Params& params) {
  return mirror_max(orbit_step(x, n, params).orbit);
}

int hat_digit(int digit, const Params& params) {
  if (digit < 0 || digit >= params.alphabet())
    throw out_of_range_error("digit out of range");
  return std::min(digit, params.alphabet() - 1 - digit);
}

Rational s_map(const Rational& x, const Params& params) {
  const Rational& rho = params.ratio();
  const Rational& R = params.stride();
  const int N = params.alphabet();
  if (x >= 0 && x <= rho) return x;
  if (x >= 1 - rho && x <= 1) return Rational(1 - x);
  for (int k = 1; k <= N - 2; ++k)
    if (x >= k * R && x <= k * R + rho) {
      Rational up = x - k * R;
      Rational down = k * R + rho - x;
      return up > down ? up : down;
    }
  throw out_of_domain_error("point lies in a gap of the first level");
}

Rational m_map(int k, const Rational& x, const Params& params) {
  if (k < 0 || k >= params.alphabet()) throw out_of_range_error("cylinder index out of range");
  Rational up = k * params.stride() + params.ratio() - x;
  Rational down = x - k * params.stride();
  return up > down ? up : down;
}

DensityReport report(const Point& x, const Params& params) {
  PrecisionGuard guard(params.precision_bits());
  const std::size_t pre = x.coding.preperiod().size();
  const std::size_t per = x.coding.period().size();
  const Real& s = params.dimension();

  // The pair (digit_n, n-step orbit point) is periodic for n past the
  // preperiod, so liminf/limsup are min/max over one period window.
  DensityReport rep;
  bool first = true;
  Coding tail = x.coding.shifted(pre);
  for (std::size_t offset = 0; offset < per; ++offset) {
    int digit = tail.digit_at(0);
    tail = tail.shifted(1);
    Rational orbit = measure::project(tail, params);
    OrbitStep step{digit, orbit};
    Rational gamma = gamma_of(step, params);
    Rational eta = mirror_max(orbit);
    int hat = hat_digit(digit, params);
    Real quotient = limsup_quotient(hat, eta, params);
    if (first || gamma < rep.gamma_liminf) rep.gamma_liminf = gamma;
    if (first || eta < rep.eta_liminf) rep.eta_liminf = eta;
    if (first || quotient > rep.limsup_branch) {
      rep.limsup_branch = quotient;
      rep.witness = UpperWitness{offset, hat, eta};
    }
    first = false;
  }

  rep.lower = pow(to_real(2 * (params.stride_ratio() - rep.gamma_liminf)), -s);
  rep.liminf_branch = pow(to_real(2 * rep.eta_liminf), -s);
  rep.upper = rep.liminf_branch > rep.limsup_branch ? rep.liminf_branch : rep.limsup_branch;
  return rep;
}

Real lower_density(const Point& x, const Params& params) {
  return report(x, params).lower;
}

Real upper_density(const Point& x, const Params& params) {
  return report(x, params).upper;
}

TypicalValues typical_values(const Params& params) {
  PrecisionGuard guard(params.precision_bits());
  const Real& s = params.dimension();
  TypicalValues tv;
  tv.lower = pow(to_real(2 * params.stride_ratio()), -s);
  tv.upper = params.alphabet() % 2 == 1
                 ? Real(1)
                 : pow(to_real(params.alphabet() * params.stride()), -s);
  return tv;
}

Real packing_measure(const Params& params) {
  PrecisionGuard guard(params.precision_bits());
  return pow(to_real(2 * params.stride_ratio()), params.dimension());
}

DensityBounds density_bounds(const Params& params) {
  PrecisionGuard guard(params.precision_bits());
  const Real& s = params.dimension();
  DensityBounds b;
  b.lower_min = pow(to_real(2 * params.stride_ratio()), -s);
  b.lower_max = pow(to_real(2 * params.stride_ratio() - 2), -s);
  b.upper_min = pow(Real(2), -s);
  b.upper_max = typical_values(params).upper;
  return b;
}

} // namespace hcm::densities
