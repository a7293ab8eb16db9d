#include <doctest.h>

#include <random>

#include <hcm/densities.hpp>
#include <hcm/errors.hpp>
#include <hcm/measure.hpp>

#include "helpers.hpp"

using namespace hcm;
namespace dn = hcm::densities;

namespace {

Point point_of(const char* literal, const Params& p) {
  return Point(Coding::parse(literal, p.alphabet()), p);
}

} // namespace

TEST_SUITE("orbit_terms") {
  TEST_CASE("gamma vanishes at the endpoints") {
    Params p = hcmtest::table_params(2);
    Point zero(Coding::constant(0), p);
    Point one(Coding::constant(1), p);
    for (std::size_t n = 1; n <= 6; ++n) {
      CHECK(dn::gamma_n(zero, n, p) == 0);
      CHECK(dn::gamma_n(one, n, p) == 0);
    }
  }

  TEST_CASE("gamma along the alternating orbit") {
    Params p = hcmtest::table_params(2);
    Point x = point_of("per=10", p);
    CHECK(x.value == Rational(4, 5));
    for (std::size_t n = 1; n <= 8; ++n) CHECK(dn::gamma_n(x, n, p) == Rational(4, 5));
  }

  TEST_CASE("eta floors at one half and hat digit folds the alphabet") {
    Params p5 = hcmtest::table_params(5);
    CHECK(dn::hat_digit(3, p5) == 1);
    CHECK(dn::hat_digit(0, p5) == 0);
    CHECK(dn::hat_digit(4, p5) == 0);
    CHECK(dn::hat_digit(2, p5) == 2);
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
      Point x(hcmtest::random_coding(rng, 5, 2, 4), p5);
      std::size_t n = 1 + rng() % 6;
      CHECK(dn::eta_n(x, n, p5) >= Rational(1, 2));
    }
    // endpoints: eta = 1, hat digit 0 for all large n
    Point one(Coding::constant(4), p5);
    CHECK(dn::eta_n(one, 3, p5) == 1);
  }

  TEST_CASE("gap maps") {
    Params p = hcmtest::table_params(4);
    const Rational rho = p.ratio();
    const Rational R = p.stride();
    CHECK(dn::s_map(rho / 3, p) == rho / 3);
    CHECK(dn::s_map(1 - rho / 5, p) == rho / 5);
    CHECK(dn::s_map(2 * R + rho / 2, p) == rho / 2);
    CHECK(dn::m_map(2, 2 * R + rho / 2, p) == rho / 2);
    CHECK(dn::m_map(1, Rational(1) * R, p) == rho);
    CHECK_THROWS_AS(dn::s_map(R / 2, p), out_of_domain_error); // middle of a gap
  }
}

TEST_SUITE("density_formulas") {
  TEST_CASE("endpoint densities are the closed-form constants") {
    Params p = hcmtest::table_params(2);
    Point zero(Coding::constant(0), p);
    CHECK(hcmtest::near(dn::lower_density(zero, p),
                        "0.408248290463863016366214012451", "1e-25"));
    CHECK(hcmtest::near(dn::upper_density(zero, p),
                        "0.707106781186547524400844362105", "1e-25"));
  }

  TEST_CASE("alternating binary point") {
    Params p = hcmtest::table_params(2);
    dn::DensityReport rep = dn::report(point_of("per=10", p), p);
    CHECK(rep.gamma_liminf == Rational(4, 5));
    CHECK(rep.eta_liminf == Rational(4, 5));
    CHECK(hcmtest::near(rep.lower, "0.476731294622796157723387960764", "1e-25"));
    CHECK(hcmtest::near(rep.upper, "0.790569415042094832999723386108", "1e-25"));
    CHECK(rep.witness.hat_digit == 0);
    CHECK(rep.witness.eta == Rational(4, 5));
  }

  TEST_CASE("fixed middle digit of the ternary instance peaks at one") {
    Params p = hcmtest::table_params(3);
    dn::DensityReport rep = dn::report(point_of("per=1", p), p);
    CHECK(rep.eta_liminf == Rational(1, 2));
    CHECK(hcmtest::near(rep.liminf_branch, "1", "1e-30"));
    CHECK(hcmtest::near(rep.limsup_branch, "1", "1e-30"));
    CHECK(hcmtest::near(rep.upper, "1", "1e-30"));
    CHECK(hcmtest::near(rep.lower, "0.377964473009227227214516536234", "1e-25"));
  }

  TEST_CASE("typical values, packing measure and global bounds") {
    Params p2 = hcmtest::table_params(2);
    dn::TypicalValues tv = dn::typical_values(p2);
    CHECK(hcmtest::near(tv.lower, "0.408248290463863016366214012451", "1e-25"));
    CHECK(hcmtest::near(tv.upper, "0.816496580927726032732428024902", "1e-25"));
    CHECK(hcmtest::near(dn::packing_measure(p2), "2.44948974278317809819728407471", "1e-25"));
    CHECK(hcmtest::near(dn::packing_measure(p2) * tv.lower, "1", "1e-30"));
    Params p4 = hcmtest::table_params(4);
    CHECK(hcmtest::near(dn::packing_measure(p4), "3.16227766016837933199889354443", "1e-25"));
    Params p3 = hcmtest::table_params(3);
    CHECK(dn::typical_values(p3).upper == 1);

    dn::DensityBounds b = dn::density_bounds(p2);
    CHECK(hcmtest::near(b.lower_min, "0.408248290463863016366214012451", "1e-25"));
    CHECK(hcmtest::near(b.lower_max, "0.5", "1e-30"));
    CHECK(hcmtest::near(b.upper_min, "0.707106781186547524400844362105", "1e-25"));
    CHECK(hcmtest::near(b.upper_max, "0.816496580927726032732428024902", "1e-25"));
    for (int N = 2; N <= 8; ++N) {
      dn::DensityBounds bounds = dn::density_bounds(hcmtest::table_params(N));
      CHECK(bounds.lower_min < bounds.lower_max);
      CHECK(bounds.lower_max < bounds.upper_min);
      CHECK(bounds.upper_min <= bounds.upper_max);
    }
  }

  TEST_CASE("codings ending in a constant block hit the endpoint constants") {
    std::mt19937_64 rng(32);
    for (int N : {2, 5}) {
      Params p = hcmtest::table_params(N);
      dn::TypicalValues tv = dn::typical_values(p);
      Real upper_edge = pow(Real(2), -p.dimension());
      for (int trial = 0; trial < 20; ++trial) {
        Word pre = hcmtest::random_word(rng, N, 1, 5);
        for (int digit : {0, N - 1}) {
          Point x(Coding(pre, Word{digit}), p);
          CHECK(hcmtest::near(dn::lower_density(x, p), tv.lower, "1e-30"));
          CHECK(hcmtest::near(dn::upper_density(x, p), upper_edge, "1e-30"));
        }
      }
    }
  }

  TEST_CASE("bounds, strictness, reflection and shift invariance on random points") {
    std::mt19937_64 rng(33);
    for (int N : {2, 3, 6}) {
      Params p = hcmtest::table_params(N);
      dn::DensityBounds bounds = dn::density_bounds(p);
      for (int trial = 0; trial < 30; ++trial) {
        Point x(hcmtest::random_coding(rng, N, 3, 5), p);
        Real lo = dn::lower_density(x, p);
        Real up = dn::upper_density(x, p);
        CHECK(lo >= bounds.lower_min - Real("1e-30"));
        CHECK(lo <= bounds.lower_max + Real("1e-30"));
        CHECK(up >= bounds.upper_min - Real("1e-30"));
        CHECK(up <= bounds.upper_max + Real("1e-30"));
        CHECK(lo < up);

        Point mirrored(x.coding.reflected(N), p);
        CHECK(hcmtest::near(dn::lower_density(mirrored, p), lo, "1e-30"));
        CHECK(hcmtest::near(dn::upper_density(mirrored, p), up, "1e-30"));

        std::size_t k = 1 + rng() % 7;
        Point shifted(x.coding.shifted(k), p);
        CHECK(hcmtest::near(dn::lower_density(shifted, p), lo, "1e-30"));
        CHECK(hcmtest::near(dn::upper_density(shifted, p), up, "1e-30"));
      }
    }
  }
}
