#include "hcm/coding.hpp"

#include <numeric>

#include "hcm/errors.hpp"

namespace hcm {
namespace {

// Shortest word whose repetition reproduces `period`.
Word primitive_root(const Word& period) {
  std::size_t n = period.size();
  for (std::size_t d = 1; d <= n / 2; ++d) {
    if (n % d != 0) continue;
    bool matches = true;
    for (std::size_t i = d; i < n && matches; ++i) matches = period[i] == period[i % d];
    if (matches) return period.sub(0, d);
  }
  return period;
}

Word rotate_right(const Word& word) {
  std::vector<int> digits;
  digits.reserve(word.size());
  digits.push_back(word.back());
  for (std::size_t i = 0; i + 1 < word.size(); ++i) digits.push_back(word[i]);
  return Word(std::move(digits));
}

} // namespace

Coding::Coding(Word preperiod, Word period)
    : preperiod_(std::move(preperiod)), period_(std::move(period)) {
  if (period_.empty()) throw out_of_range_error("coding period must be nonempty");
  period_ = primitive_root(period_);
  // Absorbing a trailing preperiod digit equal to the rolled period digit
  // keeps the sequence unchanged and shortens the presentation.
  while (!preperiod_.empty() && preperiod_.back() == period_.back()) {
    std::vector<int> digits = preperiod_.digits();
    digits.pop_back();
    preperiod_ = Word(std::move(digits));
    period_ = rotate_right(period_);
  }
}

Coding Coding::parse(std::string_view text, int alphabet) {
  Word pre, per;
  bool saw_period = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto semi = text.find(';', pos);
    auto piece = text.substr(pos, semi == std::string_view::npos ? semi : semi - pos);
    auto eq = piece.find('=');
    if (eq == std::string_view::npos) throw parse_error("coding literal needs key=digits parts");
    auto key = piece.substr(0, eq);
    auto value = piece.substr(eq + 1);
    if (key == "pre") {
      pre = Word::parse(value, alphabet);
    } else if (key == "per") {
      per = Word::parse(value, alphabet);
      saw_period = true;
    } else {
      throw parse_error("unknown coding key '" + std::string(key) + "'");
    }
    if (semi == std::string_view::npos) break;
    pos = semi + 1;
  }
  if (!saw_period || per.empty()) throw parse_error("coding literal needs a nonempty per= part");
  return Coding(std::move(pre), std::move(per));
}

Word Coding::prefix(std::size_t n_terms) const {
  std::vector<int> digits;
  digits.reserve(n_terms);
  for (std::size_t i = 0; i < n_terms; ++i) digits.push_back(digit_at(i));
  return Word(std::move(digits));
}

Coding Coding::shifted(std::size_t n) const {
  if (n == 0) return *this;
  if (n < preperiod_.size())
    return Coding(preperiod_.sub(n, preperiod_.size() - n), period_);
  std::size_t offset = (n - preperiod_.size()) % period_.size();
  if (offset == 0) return Coding(Word{}, period_);
  Word rotated = period_.sub(offset, period_.size() - offset) + period_.sub(0, offset);
  return Coding(Word{}, std::move(rotated));
}

Coding Coding::reflected(int alphabet) const {
  return Coding(reflect(preperiod_, alphabet), reflect(period_, alphabet));
}

int compare(const Coding& a, const Coding& b) {
  if (a == b) return 0;
  // Two distinct canonical presentations must disagree within the shared
  // preperiod plus a common multiple of the periods.
  std::size_t pre = std::max(a.preperiod().size(), b.preperiod().size());
  std::size_t lcm = std::lcm(a.period().size(), b.period().size());
  std::size_t limit = pre + 2 * lcm;
  for (std::size_t i = 0; i < limit; ++i) {
    int da = a.digit_at(i);
    int db = b.digit_at(i);
    if (da != db) return da < db ? -1 : 1;
  }
  return 0;
}

std::string format_coding(const Coding& coding, int alphabet) {
  std::string out;
  if (!coding.preperiod().empty())
    out += "pre=" + format_word(coding.preperiod(), alphabet) + ";";
  out += "per=" + format_word(coding.period(), alphabet);
  return out;
}

} // namespace hcm
