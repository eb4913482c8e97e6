#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "gicbound/gaussian.hpp"
#include "oracle.hpp"

using namespace gicb;

TEST_CASE("entropy closed forms") {
  System cs(Field::complex);
  GaussVar z = cs.latent();
  CHECK(entropy({z}, Field::complex) == doctest::Approx(std::log2(std::numbers::pi * std::numbers::e)).epsilon(1e-12));
  CHECK(entropy({z}, Field::complex) == doctest::Approx(3.0942).epsilon(1e-4));

  System rs(Field::real);
  GaussVar zr = rs.latent();
  CHECK(entropy({zr}, Field::real) == doctest::Approx(0.5 * std::log2(2 * std::numbers::pi * std::numbers::e)).epsilon(1e-12));
  CHECK(entropy({zr}, Field::real) == doctest::Approx(2.0471).epsilon(1e-4));

  CHECK(std::isinf(entropy({z, z}, Field::complex)));
  CHECK(entropy({z, z}, Field::complex) < 0);
  CHECK_THROWS_AS(entropy({}, Field::complex), DomainError);
}

TEST_CASE("entropy scales with variance") {
  System s(Field::complex);
  GaussVar x = s.latent(std::sqrt(10.0));
  CHECK(entropy({x}, Field::complex) - entropy({s.latent()}, Field::complex) ==
        doctest::Approx(std::log2(10.0)).epsilon(1e-12));
}

TEST_CASE("correlated pair") {
  System s(Field::complex);
  GaussVar z = s.latent();
  CHECK((z - s.correlated_pair(1.0, 1.0, z)).variance() == doctest::Approx(0.0).epsilon(1e-15));
  CHECK((z - s.correlated_pair(1.0, 0.0, z)).variance() == doctest::Approx(2.0).epsilon(1e-15));
  CHECK((z - s.correlated_pair(0.8, 0.5, z)).variance() == doctest::Approx(0.84).epsilon(1e-12));

  GaussVar w = s.correlated_pair(0.6, cd{0.3, 0.4}, z);
  CHECK(w.variance() == doctest::Approx(0.36).epsilon(1e-12));
  const cd c = covariance(z, w);
  CHECK(c.real() == doctest::Approx(0.3 * 0.6).epsilon(1e-12));
  CHECK(c.imag() == doctest::Approx(-0.4 * 0.6).epsilon(1e-12));

  CHECK_THROWS_AS(s.correlated_pair(1.2, 0.0, z), DomainError);
  CHECK_THROWS_AS(s.correlated_pair(-0.1, 0.0, z), DomainError);
  CHECK_THROWS_AS(s.correlated_pair(0.5, 1.5, z), DomainError);
  System r(Field::real);
  GaussVar zr = r.latent();
  CHECK_THROWS_AS(r.correlated_pair(0.5, cd{0.0, 0.5}, zr), DomainError);
}

TEST_CASE("mutual information anchors") {
  System s(Field::complex);
  GaussVar x = s.latent(std::sqrt(10.0));
  GaussVar z = s.latent();
  CHECK(mutual_info({x}, {x + z}, {}, Field::complex) == doctest::Approx(std::log2(11.0)).epsilon(1e-12));

  // Y1 = X1 + g X2 + g X3 + Z1 with g^2 = 0.5, P = 10.
  System t(Field::complex);
  const double g = std::sqrt(0.5);
  GaussVar x1 = t.latent(std::sqrt(10.0)), x2 = t.latent(std::sqrt(10.0)), x3 = t.latent(std::sqrt(10.0));
  GaussVar y1 = x1 + g * x2 + g * x3 + t.latent();
  const double v = mutual_info({x1}, {y1}, {x3}, Field::complex);
  CHECK(v == doctest::Approx(std::log2(1.0 + 10.0 / 6.0)).epsilon(1e-12));
  CHECK(v == doctest::Approx(1.4150).epsilon(1e-4));

  CHECK(std::isinf(mutual_info({x1}, {x1}, {}, Field::complex)));
  CHECK(mutual_info({x1}, {x2}, {}, Field::complex) == doctest::Approx(0.0));
  // Conditioning on a deterministic function of the target leaves nothing.
  CHECK(mutual_info({x1}, {y1}, {x1}, Field::complex) == 0.0);
  CHECK_THROWS_AS(mutual_info({x1}, {cd{0.0, 1.0} * x2}, {}, Field::real), DomainError);
}

TEST_CASE("conditional variance") {
  System s(Field::complex);
  GaussVar a = s.latent(), b = s.latent();
  CHECK(conditional_variance(a + b, {b}) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(conditional_variance(a + b, {a + b}) == doctest::Approx(0.0));
  CHECK(conditional_variance(a + b, {}) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("randomized systems against the determinant oracle") {
  std::mt19937_64 rng(20240917);
  for (int trial = 0; trial < 100; ++trial) {
    const Field f = trial % 2 ? Field::real : Field::complex;
    const auto rs = oracle::random_system(rng, 8, 7, f);
    const auto& v = rs.vars;
    const std::vector<GaussVar> A{v[0], v[1]}, B{v[2]}, C{v[3], v[4]}, D{v[5], v[6]};
    CAPTURE(trial);

    const double iab_c = mutual_info(A, B, C, f);
    const double iad_bc = mutual_info(A, D, oracle::cat(B, C), f);
    const double iabd_c = mutual_info(A, oracle::cat(B, D), C, f);

    // nonnegativity
    CHECK(iab_c >= -1e-9);
    CHECK(iad_bc >= -1e-9);
    // chain rule
    CHECK(std::abs(iab_c + iad_bc - iabd_c) < 1e-9);
    // symmetry
    CHECK(std::abs(mutual_info(B, A, C, f) - iab_c) < 1e-9);
    // conditioning-set invariance: reordering, duplicates and invertible mixing
    const std::vector<GaussVar> C2{v[4], v[3], v[3], 2.0 * v[3] - 0.5 * v[4]};
    CHECK(std::abs(mutual_info(A, B, C2, f) - iab_c) < 1e-9);
    const std::vector<GaussVar> A2{v[0] + 3.0 * v[1], v[1] - v[3]};
    CHECK(std::abs(mutual_info(A2, B, C, f) - iab_c) < 1e-9);

    CHECK(std::abs(iab_c - oracle::mutual_info(A, B, C, f)) < 1e-9);
    CHECK(std::abs(iabd_c - oracle::mutual_info(A, oracle::cat(B, D), C, f)) < 1e-9);
    CHECK(std::abs(entropy(v, f) - oracle::entropy(v, f)) < 1e-9);
    // h(A|C) = h(A,C) - h(C)
    const double hac = entropy(oracle::cat(A, C), f) - entropy(C, f);
    CHECK(std::abs((entropy(A, f) - hac) - mutual_info(A, C, {}, f)) < 1e-9);
  }
}
