#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "hcm/word.hpp"

namespace hcm {

/// Eventually periodic digit sequence preperiod . period^inf, kept in
/// canonical form: the period is primitive and the preperiod is shortest
/// (its last digit differs from the digit the rolled period would supply).
/// Canonical form makes structural equality coincide with sequence equality.
class Coding {
public:
  /// Canonicalizes on construction. The period must be nonempty.
  Coding(Word preperiod, Word period);

  static Coding periodic(Word period) { return Coding(Word{}, std::move(period)); }
  static Coding constant(int digit) { return periodic(Word{digit}); }

  /// Parses the literal grammar "pre=<digits>;per=<digits>" (the pre= part
  /// may be omitted). Digits follow the Word::parse convention.
  static Coding parse(std::string_view text, int alphabet);

  const Word& preperiod() const { return preperiod_; }
  const Word& period() const { return period_; }

  /// 0-based digit access; digit_at(n-1) is the 1-based digit d_n.
  int digit_at(std::size_t i) const {
    return i < preperiod_.size()
               ? preperiod_[i]
               : period_[(i - preperiod_.size()) % period_.size()];
  }

  Word prefix(std::size_t n_terms) const;

  /// Drops the first n digits.
  Coding shifted(std::size_t n) const;
  Coding reflected(int alphabet) const;

  bool operator==(const Coding&) const = default;

private:
  Word preperiod_;
  Word period_;
};

/// Exact lexicographic comparison of the two infinite sequences: -1/0/1.
int compare(const Coding& a, const Coding& b);

/// Inverse of Coding::parse.
std::string format_coding(const Coding& coding, int alphabet);

} // namespace hcm
