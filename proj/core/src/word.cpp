#include "hcm/word.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "hcm/errors.hpp"

namespace hcm {

Word Word::parse(std::string_view text, int alphabet) {
  std::vector<int> digits;
  if (alphabet <= 10) {
    for (char ch : text) {
      if (ch < '0' || ch > '9') throw parse_error(std::string("bad digit character '") + ch + "'");
      digits.push_back(ch - '0');
    }
  } else if (!text.empty()) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      auto comma = text.find(',', pos);
      auto piece = text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
      int value = 0;
      auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
      if (ec != std::errc{} || ptr != piece.data() + piece.size())
        throw parse_error("bad digit token '" + std::string(piece) + "'");
      digits.push_back(value);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
  }
  Word word(std::move(digits));
  validate_digits(word, alphabet);
  return word;
}

Word Word::repeated(int digit, std::size_t count) {
  return Word(std::vector<int>(count, digit));
}

Word Word::sub(std::size_t pos, std::size_t count) const {
  return Word({digits_.begin() + pos, digits_.begin() + pos + count});
}

Word Word::operator+(const Word& other) const {
  std::vector<int> digits = digits_;
  digits.insert(digits.end(), other.digits_.begin(), other.digits_.end());
  return Word(std::move(digits));
}

void validate_digits(const Word& word, int alphabet) {
  for (int d : word)
    if (d < 0 || d >= alphabet)
      throw out_of_range_error("digit " + std::to_string(d) + " out of range for alphabet " +
                               std::to_string(alphabet));
}

Word reflect(const Word& word, int alphabet) {
  std::vector<int> digits;
  digits.reserve(word.size());
  for (int d : word) digits.push_back(alphabet - 1 - d);
  return Word(std::move(digits));
}

Word successor(const Word& word, int alphabet) {
  if (word.empty() || word.back() >= alphabet - 1)
    throw digit_overflow_error("cannot increment last digit");
  std::vector<int> digits = word.digits();
  ++digits.back();
  return Word(std::move(digits));
}

Word predecessor(const Word& word) {
  if (word.empty() || word.back() <= 0)
    throw digit_underflow_error("cannot decrement last digit");
  std::vector<int> digits = word.digits();
  --digits.back();
  return Word(std::move(digits));
}

int compare_padded(const Word& a, const Word& b) {
  std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    int da = i < a.size() ? a[i] : 0;
    int db = i < b.size() ? b[i] : 0;
    if (da != db) return da < db ? -1 : 1;
  }
  return 0;
}

std::string format_word(const Word& word, int alphabet) {
  std::ostringstream out;
  bool first = true;
  for (int d : word) {
    if (alphabet <= 10) {
      out << d;
    } else {
      if (!first) out << ',';
      out << d;
    }
    first = false;
  }
  return out.str();
}

} // namespace hcm
