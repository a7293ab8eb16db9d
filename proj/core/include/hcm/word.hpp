#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace hcm {

/// Finite digit string over {0, ..., alphabet-1}. The alphabet is carried by
/// the operation, not the word, so the same word can be reused across
/// instances that share digits.
class Word {
public:
  Word() = default;
  explicit Word(std::vector<int> digits) : digits_(std::move(digits)) {}
  Word(std::initializer_list<int> digits) : digits_(digits) {}

  /// Parses digits: one character per digit for alphabets up to 10,
  /// comma-separated integers otherwise (e.g. "10,3,0").
  static Word parse(std::string_view text, int alphabet);

  static Word repeated(int digit, std::size_t count);

  std::size_t size() const { return digits_.size(); }
  bool empty() const { return digits_.empty(); }
  int operator[](std::size_t i) const { return digits_[i]; }
  const std::vector<int>& digits() const { return digits_; }

  void push_back(int digit) { digits_.push_back(digit); }
  int back() const { return digits_.back(); }

  /// Digits [pos, pos+count).
  Word sub(std::size_t pos, std::size_t count) const;
  Word operator+(const Word& other) const;

  bool operator==(const Word&) const = default;

  auto begin() const { return digits_.begin(); }
  auto end() const { return digits_.end(); }

private:
  std::vector<int> digits_;
};

/// Throws out_of_range_error unless every digit lies in [0, alphabet).
void validate_digits(const Word& word, int alphabet);

/// Digitwise complement d -> alphabet-1-d. Involutive.
Word reflect(const Word& word, int alphabet);

/// Last digit incremented; throws digit_overflow_error if it is already
/// alphabet-1 (or the word is empty).
Word successor(const Word& word, int alphabet);

/// Last digit decremented; throws digit_underflow_error if it is already 0
/// (or the word is empty).
Word predecessor(const Word& word);

/// Lexicographic comparison of a0^inf vs b0^inf; returns -1/0/1. Words of
/// unequal length compare equal when the longer one only appends zeros.
int compare_padded(const Word& a, const Word& b);

/// Inverse of Word::parse.
std::string format_word(const Word& word, int alphabet);

} // namespace hcm
