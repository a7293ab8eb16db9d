#include "hcm/rational.hpp"

#include <sstream>

#include "hcm/errors.hpp"

namespace hcm {

namespace {

// GMP would read a leading 0 as an octal prefix.
Int parse_int(const std::string& digits) {
  std::string s = digits;
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  std::size_t first = s.find_first_not_of('0', start);
  if (first == std::string::npos) first = s.size() - 1;
  s.erase(start, first - start);
  return Int(s);
}

} // namespace

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw parse_error("empty rational literal");
  try {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
      Int num = parse_int(s.substr(0, slash));
      Int den = parse_int(s.substr(slash + 1));
      if (den == 0) throw parse_error("zero denominator in '" + s + "'");
      return Rational(num, den);
    }
    long exponent = 0;
    auto e = s.find_first_of("eE");
    if (e != std::string::npos) {
      exponent = std::stol(s.substr(e + 1));
      s = s.substr(0, e);
    }
    Rational value;
    auto dot = s.find('.');
    if (dot != std::string::npos) {
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      std::size_t frac_len = s.size() - dot - 1;
      if (digits.empty() || digits == "-" || digits == "+")
        throw parse_error("malformed decimal '" + s + "'");
      value = Rational(parse_int(digits), ipow(Int(10), static_cast<unsigned>(frac_len)));
    } else {
      value = Rational(parse_int(s));
    }
    Int scale = ipow(Int(10), static_cast<unsigned>(exponent < 0 ? -exponent : exponent));
    if (exponent < 0) return Rational(value / scale);
    return Rational(value * scale);
  } catch (const parse_error&) {
    throw;
  } catch (const std::exception&) {
    throw parse_error("malformed rational '" + std::string(text) + "'");
  }
}

std::string format_rational(const Rational& value) {
  std::ostringstream out;
  out << value;
  return out.str();
}

Int ipow(Int base, unsigned exponent) {
  Int result(1);
  while (exponent != 0) {
    if (exponent & 1u) result *= base;
    base *= base;
    exponent >>= 1u;
  }
  return result;
}

Rational rational_pow(const Rational& base, unsigned exponent) {
  return Rational(ipow(numerator(base), exponent), ipow(denominator(base), exponent));
}

Int rational_floor(const Rational& value) {
  Int q, r;
  divide_qr(numerator(value), denominator(value), q, r);
  if (r != 0 && value < 0) --q;
  return q;
}

Int rational_ceil(const Rational& value) {
  return -rational_floor(-value);
}

Rational random_unit_rational(std::mt19937_64& rng, unsigned bits) {
  Int num(0);
  unsigned produced = 0;
  while (produced < bits) {
    unsigned take = std::min(64u, bits - produced);
    std::uint64_t chunk = rng() >> (64u - take);
    num = (num << take) | Int(chunk);
    produced += take;
  }
  return Rational(num, ipow(Int(2), bits));
}

int random_digit(std::mt19937_64& rng, int alphabet) {
  return static_cast<int>(rng() % static_cast<std::uint64_t>(alphabet));
}

} // namespace hcm
