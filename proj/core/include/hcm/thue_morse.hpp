#pragma once

#include <cstddef>

#include "hcm/word.hpp"

namespace hcm::tm {

/// Longest doubling exponent accepted by the exhaustive order checks.
inline constexpr int kOrderCheckCap = 16;

/// First n_terms digits of the sequence that starts with alphabet-1 and
/// doubles by "reflect, then increment the last digit". Digits stay in
/// {0, 1, alphabet-2, alphabet-1}.
Word lambda_prefix(int alphabet, std::size_t n_terms);

/// First n_terms digits of the pure reflection-doubling sequence. Digits
/// stay in {0, alphabet-1}.
Word theta_prefix(int alphabet, std::size_t n_terms);

/// First n_terms digits of the classical Thue-Morse sequence 0110...
Word classical_tau_prefix(std::size_t n_terms);

/// Exhaustively verifies, over the prefix of length 2^n, that every shifted
/// suffix of the lambda prefix sits strictly above the reflected prefix and
/// at most at the prefix itself.
bool check_lambda_order(int alphabet, int n);

/// Verifies that within the first 2^n terms every interior digit of lambda
/// (one of 1..alphabet-2) is followed by 0 or alphabet-1.
bool check_lambda_successor(int alphabet, int n);

/// Exhaustive two-sided order check for the theta prefix of length 2^n+1.
bool check_theta_order(int alphabet, int n);

/// Checks digitwise that theta_i = (alphabet-1)*(1 - tau_{i-1}) for
/// i <= n_terms.
bool theta_tau_relation(int alphabet, std::size_t n_terms);

} // namespace hcm::tm
