#pragma once

#include <doctest.h>

#include <random>
#include <vector>

#include <hcm/coding.hpp>
#include <hcm/params.hpp>
#include <hcm/real.hpp>
#include <hcm/word.hpp>

namespace hcmtest {

inline bool near(const hcm::Real& a, const hcm::Real& b, const char* tol) {
  return abs(a - b) <= hcm::Real(tol);
}

inline bool near(const hcm::Real& a, const char* b, const char* tol) {
  return near(a, hcm::Real(b), tol);
}

inline hcm::Params table_params(int alphabet, unsigned bits = hcm::kDefaultPrecisionBits) {
  return hcm::Params(alphabet, hcm::Rational(1, alphabet * alphabet), bits);
}

inline hcm::Word random_word(std::mt19937_64& rng, int alphabet, std::size_t min_len,
                             std::size_t max_len) {
  std::size_t len = min_len + rng() % (max_len - min_len + 1);
  std::vector<int> digits(len);
  for (int& d : digits) d = hcm::random_digit(rng, alphabet);
  return hcm::Word(std::move(digits));
}

inline hcm::Coding random_coding(std::mt19937_64& rng, int alphabet, std::size_t max_pre,
                                 std::size_t max_per) {
  hcm::Word per = random_word(rng, alphabet, 1, max_per);
  hcm::Word pre = max_pre == 0 ? hcm::Word{} : random_word(rng, alphabet, 0, max_pre);
  return hcm::Coding(std::move(pre), std::move(per));
}

} // namespace hcmtest
