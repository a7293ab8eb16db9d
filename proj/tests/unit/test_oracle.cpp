#include <doctest.h>

#include <random>

#include <hcm/densities.hpp>
#include <hcm/errors.hpp>
#include <hcm/oracle.hpp>

#include "helpers.hpp"

using namespace hcm;
namespace oc = hcm::oracle;

namespace {

const Rational kTol(1, ipow(Int(10), 15));

} // namespace

TEST_SUITE("ball_cover") {
  TEST_CASE("ball around the origin covering the first cylinder") {
    Params p = hcmtest::table_params(2);
    oc::CylinderCover cover = oc::ball_cover(Rational(0), Rational(3, 4), 6, p);
    measure::MeasureValue m = cover.to_measure(p);
    CHECK(m.lo <= Rational(1, 2));
    CHECK(m.hi >= Rational(1, 2));
    CHECK(m.width() <= Rational(2, 64));
  }

  TEST_CASE("covering ball and gap ball are exact") {
    Params p = hcmtest::table_params(3);
    oc::CylinderCover full = oc::ball_cover(Rational(1, 2), Rational(2), 4, p);
    CHECK(full.inside == ipow(Int(3), 4));
    CHECK(full.straddling == 0);
    CHECK(full.to_measure(p).exact == Rational(1));
    // strictly inside the gap between the first two cylinders
    Rational mid = (p.ratio() + p.stride()) / 2;
    oc::CylinderCover empty = oc::ball_cover(mid, (p.stride() - p.ratio()) / 4, 6, p);
    CHECK(empty.inside == 0);
    CHECK(empty.straddling == 0);
    CHECK(empty.to_measure(p).exact == Rational(0));
  }

  TEST_CASE("enclosures narrow on refinement and stay consistent with the cdf route") {
    std::mt19937_64 rng(51);
    for (int N : {2, 4}) {
      Params p = hcmtest::table_params(N);
      for (int trial = 0; trial < 12; ++trial) {
        Rational x = random_unit_rational(rng, 20);
        Rational r = (random_unit_rational(rng, 16) + Rational(1, 100)) / 2;
        Rational prev_width(-1);
        for (int depth : {4, 7, 10}) {
          measure::MeasureValue brute = oc::ball_cover(x, r, depth, p).to_measure(p);
          if (prev_width >= 0) CHECK(brute.width() <= prev_width);
          prev_width = brute.width();
          measure::MeasureValue direct = measure::ball_measure(x, r, p, kTol);
          CHECK(brute.hi >= direct.lo);
          CHECK(direct.hi >= brute.lo);
        }
      }
    }
  }

  TEST_CASE("head mass agrees with the cdf route") {
    // mu([0,t]) equals the mass of the open ball (-1, t); the two values
    // come from fully independent code paths
    std::mt19937_64 rng(53);
    for (int N : {2, 3}) {
      Params p = hcmtest::table_params(N);
      for (int trial = 0; trial < 20; ++trial) {
        Rational t = random_unit_rational(rng, 24);
        measure::MeasureValue head = measure::cdf(t, p, kTol);
        Rational center = (t - 1) / 2;
        Rational radius = (t + 1) / 2;
        if (radius <= 0) continue;
        measure::MeasureValue brute = oc::ball_cover(center, radius, 12, p).to_measure(p);
        CHECK(brute.lo <= head.hi);
        CHECK(head.lo <= brute.hi);
      }
    }
  }

  TEST_CASE("node budget is enforced") {
    Params p = hcmtest::table_params(8);
    CHECK_THROWS_AS(oc::ball_cover(Rational(1, 3), Rational(1, 7), 12, p, 3),
                    budget_exceeded_error);
  }
}

TEST_SUITE("density_scans") {
  TEST_CASE("origin scans settle at the endpoint constants") {
    Params p = hcmtest::table_params(2);
    Point zero(Coding::constant(0), p);
    RealBound low = oc::lower_density_scan(zero, p, 4, 10, 8);
    CHECK(abs(low.mid() - Real("0.408248290463863")) <= Real("5e-3"));
    RealBound up = oc::upper_density_scan(zero, p, 4, 10, 8);
    CHECK(abs(up.mid() - Real("0.707106781186547")) <= Real("5e-3"));
  }

  TEST_CASE("alternating binary point matches the formula values") {
    Params p = hcmtest::table_params(2);
    Point x(Coding::periodic(Word::parse("10", 2)), p);
    RealBound low = oc::lower_density_scan(x, p, 4, 10, 8);
    CHECK(abs(low.mid() - Real("0.476731294622796")) <= Real("5e-3"));
    RealBound up = oc::upper_density_scan(x, p, 4, 10, 8);
    CHECK(abs(up.mid() - Real("0.790569415042095")) <= Real("5e-3"));
    CHECK(up.hi <= Real(1) + Real("1e-20"));
  }

  TEST_CASE("scans bracket the formulas on random points") {
    std::mt19937_64 rng(52);
    for (int N : {2, 3}) {
      Params p = hcmtest::table_params(N);
      for (int trial = 0; trial < 4; ++trial) {
        Point x(hcmtest::random_coding(rng, N, 2, 4), p);
        Real lower = densities::lower_density(x, p);
        Real upper = densities::upper_density(x, p);
        RealBound low_scan = oc::lower_density_scan(x, p, 4, 10, 8);
        RealBound up_scan = oc::upper_density_scan(x, p, 4, 10, 8);
        // the scan can only miss extrema, so it sits on the inner side
        CHECK(low_scan.hi >= lower - Real("1e-12"));
        CHECK(up_scan.lo <= upper + Real("1e-12"));
        CHECK(abs(low_scan.mid() - lower) <= Real("5e-3"));
        CHECK(abs(up_scan.mid() - upper) <= Real("5e-3"));
      }
    }
  }
}

TEST_SUITE("typical_sampling") {
  TEST_CASE("deterministic under a fixed seed") {
    Params p = hcmtest::table_params(2);
    oc::TypicalStats a = oc::sample_typical(p, 40, 32, 7);
    oc::TypicalStats b = oc::sample_typical(p, 40, 32, 7);
    REQUIRE(a.lower.size() == b.lower.size());
    for (std::size_t i = 0; i < a.lower.size(); ++i) {
      CHECK(a.lower[i] == b.lower[i]);
      CHECK(a.upper[i] == b.upper[i]);
    }
    oc::TypicalStats c = oc::sample_typical(p, 40, 32, 8);
    bool all_same = true;
    for (std::size_t i = 0; i < a.lower.size(); ++i)
      if (a.lower[i] != c.lower[i]) all_same = false;
    CHECK_FALSE(all_same);
  }

  TEST_CASE("long random codings cluster at the typical values") {
    for (int N : {2, 3}) {
      Params p = hcmtest::table_params(N);
      oc::TypicalStats stats = oc::sample_typical(p, 60, 64, 1);
      CHECK(abs(stats.median_lower() - stats.lower_target) <= Real("0.02"));
      CHECK(stats.fraction_lower_within(Real("0.02")) >= 0.8);
    }
    // odd alphabet: long runs of the middle digit push the upper density to 1
    oc::TypicalStats odd = oc::sample_typical(hcmtest::table_params(3), 60, 64, 1);
    CHECK(odd.median_upper() >= Real("0.99"));
    CHECK(odd.upper_target == 1);
  }
}
