#include "hcm/thue_morse.hpp"

#include <string>

#include "hcm/errors.hpp"

namespace hcm::tm {
namespace {

void check_terms(std::size_t n_terms) {
  if (n_terms < 1) throw out_of_range_error("need at least one term");
}

void check_doubling(int n) {
  if (n < 1 || n > kOrderCheckCap)
    throw out_of_range_error("doubling exponent must lie in [1, " +
                             std::to_string(kOrderCheckCap) + "]");
}

std::vector<int> doubled_prefix(int alphabet, std::size_t n_terms, bool increment_last) {
  std::vector<int> seq{alphabet - 1};
  while (seq.size() < n_terms) {
    std::size_t len = seq.size();
    seq.reserve(2 * len);
    for (std::size_t i = 0; i < len; ++i) seq.push_back(alphabet - 1 - seq[i]);
    if (increment_last) ++seq.back();
  }
  seq.resize(n_terms);
  return seq;
}

} // namespace

Word lambda_prefix(int alphabet, std::size_t n_terms) {
  check_terms(n_terms);
  if (alphabet < 2) throw bad_alphabet_error("alphabet must have at least 2 digits");
  return Word(doubled_prefix(alphabet, n_terms, true));
}

Word theta_prefix(int alphabet, std::size_t n_terms) {
  check_terms(n_terms);
  if (alphabet < 2) throw bad_alphabet_error("alphabet must have at least 2 digits");
  return Word(doubled_prefix(alphabet, n_terms, false));
}

Word classical_tau_prefix(std::size_t n_terms) {
  check_terms(n_terms);
  std::vector<int> seq{0};
  while (seq.size() < n_terms) {
    std::size_t len = seq.size();
    for (std::size_t i = 0; i < len; ++i) seq.push_back(1 - seq[i]);
  }
  seq.resize(n_terms);
  return Word(std::move(seq));
}

bool check_lambda_order(int alphabet, int n) {
  check_doubling(n);
  std::size_t len = std::size_t{1} << n;
  Word lam = lambda_prefix(alphabet, len);
  for (std::size_t i = 0; i < len; ++i) {
    Word suffix = lam.sub(i, len - i);
    Word head = lam.sub(0, len - i);
    if (compare_padded(reflect(head, alphabet), suffix) >= 0) return false;
    if (compare_padded(suffix, head) > 0) return false;
  }
  return true;
}

bool check_lambda_successor(int alphabet, int n) {
  check_doubling(n);
  std::size_t len = std::size_t{1} << n;
  Word lam = lambda_prefix(alphabet, len);
  for (std::size_t i = 0; i + 1 < len; ++i) {
    if (lam[i] >= 1 && lam[i] <= alphabet - 2) {
      if (lam[i + 1] != 0 && lam[i + 1] != alphabet - 1) return false;
    }
  }
  return true;
}

bool check_theta_order(int alphabet, int n) {
  check_doubling(n);
  std::size_t len = std::size_t{1} << n;
  Word theta = theta_prefix(alphabet, len + 1);
  // Compare theta_2..theta_{len-i+1} against the shifted block
  // theta_{i+2}..theta_{len+1}, both read 0-based from the prefix.
  for (std::size_t i = 0; i < len; ++i) {
    Word base = theta.sub(1, len - i);
    Word shifted = theta.sub(i + 1, len - i);
    if (compare_padded(base, shifted) > 0) return false;
    if (compare_padded(shifted, reflect(base, alphabet)) >= 0) return false;
  }
  return true;
}

bool theta_tau_relation(int alphabet, std::size_t n_terms) {
  check_terms(n_terms);
  Word theta = theta_prefix(alphabet, n_terms);
  Word tau = classical_tau_prefix(n_terms);
  for (std::size_t i = 0; i < n_terms; ++i)
    if (theta[i] != (alphabet - 1) * (1 - tau[i])) return false;
  return true;
}

} // namespace hcm::tm
