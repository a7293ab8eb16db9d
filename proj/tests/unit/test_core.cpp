#include <doctest.h>

#include <random>

#include <hcm/coding.hpp>
#include <hcm/errors.hpp>
#include <hcm/params.hpp>
#include <hcm/word.hpp>

#include "helpers.hpp"

using namespace hcm;

TEST_SUITE("params") {
  TEST_CASE("table instance derives stride and dimension") {
    Params p(2, Rational(1, 4), 128);
    CHECK(p.stride() == Rational(3, 4));
    CHECK(hcmtest::near(p.dimension(), "0.5", "1e-35"));
    CHECK((p.alphabet() - 1) * p.stride() + p.ratio() == 1);
  }

  TEST_CASE("stride formula across instances") {
    // ratios above 1/alphabet^2 are rejected even though the construction
    // itself would still make sense geometrically
    CHECK_THROWS_AS(Params(4, Rational(1, 10), 128), out_of_range_error);
    CHECK(Params(4, Rational(1, 16), 128).stride() == Rational(5, 16));
    CHECK(Params(3, Rational(1, 12), 128).stride() == Rational(11, 24));
  }

  TEST_CASE("rejects ratios above the supported range") {
    CHECK_THROWS_AS(Params(2, Rational(1, 3), 128), out_of_range_error);
    CHECK_THROWS_AS(Params(2, Rational(0), 128), out_of_range_error);
    CHECK_THROWS_AS(Params(2, Rational(-1, 5), 128), out_of_range_error);
    CHECK_THROWS_AS(Params(1, Rational(1, 4), 128), bad_alphabet_error);
  }

  TEST_CASE("derived invariants on assorted instances") {
    for (int N = 2; N <= 9; ++N) {
      Params p = hcmtest::table_params(N);
      CHECK(p.ratio() / p.stride() <= Rational(1, N + 1));
      CHECK(p.dimension() > 0);
      CHECK(p.dimension() <= Real("0.5") + Real("1e-30"));
    }
    // ratio strictly below the cap pushes the dimension below 1/2
    Params small(3, Rational(1, 100), 128);
    CHECK(small.dimension() < Real("0.5"));
  }
}

TEST_SUITE("rationals") {
  TEST_CASE("literal forms") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(parse_rational("0.25") == Rational(1, 4));
    CHECK(parse_rational("1e-3") == Rational(1, 1000));
    CHECK(parse_rational("2.5e2") == Rational(250));
    CHECK(parse_rational("-1.5e-1") == Rational(-3, 20));
    CHECK_THROWS_AS(parse_rational("1/0"), parse_error);
    CHECK_THROWS_AS(parse_rational("abc"), parse_error);
    CHECK(format_rational(Rational(4, 8)) == "1/2");
    CHECK(format_rational(Rational(3)) == "3");
  }
}

TEST_SUITE("reals") {
  TEST_CASE("rational conversion lands at the working precision") {
    // constructing mpfr values from rational expressions directly can pick
    // up a bogus precision; to_real must pin the default one
    PrecisionGuard guard(128);
    Rational a(1, 4), b(3, 4);
    Real converted = to_real(a / b);
    CHECK(converted.precision() == Real::default_precision());
    CHECK(hcmtest::near(converted, Real(1) / 3, "1e-35"));
    CHECK(to_real(1 - a).precision() == Real::default_precision());
  }

  TEST_CASE("precision guard restores on exit") {
    unsigned before = Real::default_precision();
    {
      PrecisionGuard guard(512);
      CHECK(Real::default_precision() == bits_to_digits10(512));
    }
    CHECK(Real::default_precision() == before);
  }
}

TEST_SUITE("words") {
  TEST_CASE("reflection examples") {
    CHECK(reflect(Word::parse("103", 4), 4) == Word::parse("230", 4));
    CHECK(reflect(Word::parse("1101", 2), 2) == Word::parse("0010", 2));
    CHECK(reflect(Word{}, 5) == Word{});
  }

  TEST_CASE("increment and decrement of the last digit") {
    CHECK(successor(Word::parse("00", 2), 2) == Word::parse("01", 2));
    CHECK(predecessor(Word::parse("13", 4)) == Word::parse("12", 4));
    CHECK_THROWS_AS(successor(Word::parse("01", 2), 2), digit_overflow_error);
    CHECK_THROWS_AS(predecessor(Word::parse("10", 2)), digit_underflow_error);
  }

  TEST_CASE("reflection is an involution") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
      int N = 2 + static_cast<int>(rng() % 11);
      Word w = hcmtest::random_word(rng, N, 0, 40);
      CHECK(reflect(reflect(w, N), N) == w);
    }
  }

  TEST_CASE("successor and predecessor cancel") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 200; ++trial) {
      int N = 2 + static_cast<int>(rng() % 11);
      Word w = hcmtest::random_word(rng, N, 1, 20);
      if (w.back() < N - 1) CHECK(predecessor(successor(w, N)) == w);
      if (w.back() > 0) CHECK(successor(predecessor(w), N) == w);
    }
  }

  TEST_CASE("padded comparison treats trailing zeros as absent") {
    CHECK(compare_padded(Word::parse("1", 2), Word::parse("10", 2)) == 0);
    CHECK(compare_padded(Word::parse("1", 2), Word::parse("11", 2)) < 0);
    CHECK(compare_padded(Word::parse("20", 3), Word::parse("12", 3)) > 0);
  }

  TEST_CASE("digit validation") {
    CHECK_THROWS_AS(Word::parse("3", 3), out_of_range_error);
    CHECK_THROWS_AS(Word::parse("x", 3), parse_error);
    CHECK(Word::parse("10,3,0", 11) == Word({10, 3, 0}));
  }
}

TEST_SUITE("codings") {
  TEST_CASE("canonical form merges equivalent presentations") {
    Coding a = Coding::periodic(Word::parse("01", 2));
    Coding b(Word::parse("0", 2), Word::parse("10", 2));
    CHECK(a == b);
    CHECK(compare(a, b) == 0);
  }

  TEST_CASE("period is made primitive") {
    Coding c = Coding::periodic(Word::parse("0101", 2));
    CHECK(c.period().size() == 2);
    Coding d = Coding::periodic(Word::parse("222", 3));
    CHECK(d.period().size() == 1);
  }

  TEST_CASE("lexicographic comparison examples") {
    Coding a = Coding::periodic(Word::parse("10", 2)); // (10)^inf
    Coding b = Coding::constant(1);                    // (1)^inf
    CHECK(compare(a, b) < 0);
    Coding c(Word::parse("1", 2), Word::parse("10", 2)); // 1(10)^inf
    CHECK(compare(c, b) < 0);
  }

  TEST_CASE("shift drops digits and recanonicalizes") {
    Coding c = Coding::periodic(Word::parse("10", 2));
    CHECK(c.shifted(1) == Coding::periodic(Word::parse("01", 2)));
    CHECK(c.shifted(0) == c);
    Coding d(Word::parse("1101", 2), Word::parse("10", 2));
    CHECK(d.shifted(4) == c);
  }

  TEST_CASE("parse round trip") {
    Coding c = Coding::parse("pre=1;per=10", 2);
    CHECK(c.preperiod() == Word::parse("1", 2));
    CHECK(format_coding(Coding::parse(format_coding(c, 2), 2), 2) == format_coding(c, 2));
    CHECK_THROWS_AS(Coding::parse("pre=1", 2), parse_error);
    CHECK_THROWS_AS(Coding::parse("per=", 2), parse_error);
  }

  TEST_CASE("comparison is a total order on random triples") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 200; ++trial) {
      int N = 2 + static_cast<int>(rng() % 5);
      Coding a = hcmtest::random_coding(rng, N, 3, 5);
      Coding b = hcmtest::random_coding(rng, N, 3, 5);
      Coding c = hcmtest::random_coding(rng, N, 3, 5);
      CHECK(compare(a, a) == 0);
      CHECK(compare(a, b) == -compare(b, a));
      // transitivity on the sorted triple
      if (compare(a, b) <= 0 && compare(b, c) <= 0) CHECK(compare(a, c) <= 0);
    }
  }

  TEST_CASE("shift composes") {
    std::mt19937_64 rng(10);
    for (int trial = 0; trial < 100; ++trial) {
      int N = 2 + static_cast<int>(rng() % 5);
      Coding c = hcmtest::random_coding(rng, N, 4, 6);
      std::size_t m = rng() % 5, n = rng() % 5;
      CHECK(c.shifted(m + n) == c.shifted(m).shifted(n));
    }
  }

  TEST_CASE("canonicalization is idempotent") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
      int N = 2 + static_cast<int>(rng() % 5);
      Coding c = hcmtest::random_coding(rng, N, 4, 6);
      CHECK(Coding(c.preperiod(), c.period()) == c);
      // canonical := last preperiod digit differs from the rolled period digit
      if (!c.preperiod().empty()) CHECK(c.preperiod().back() != c.period().back());
    }
  }
}
