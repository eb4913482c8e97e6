#include <doctest.h>

#include <chrono>
#include <cmath>

#include "gicbound/baselines.hpp"
#include "gicbound/genie3.hpp"
#include "gicbound/kuser.hpp"

using namespace gicb;

namespace {

using ld = long double;

// Closed forms summed term by term in long double.
ld prop1_ref(int K, ld g, ld P) {
  const ld g2 = g * g;
  ld s = std::log2(1 + P / ((K - 1) * g2 * P + 1)) + std::log2(1 + (K - 1) * P);
  for (int k = 2; k <= K - 1; ++k)
    s += std::log2(1 + (1 - g) * (1 - g) * P / (1 - g2) * ((k - 1) * P + 1) / (k * P + 1));
  return s;
}

ld prop2_ref(int K, ld g, ld P) {
  const ld g2 = g * g, a = 1 / (1 + g2);
  ld s = std::log2(1 + P / ((K - 1) * g2 * P + 1)) + std::log2(1 + (K - 1) * (1 + g2) * P);
  for (int k = 2; k <= K - 1; ++k)
    s += std::log2(1 + (1 - g) * (1 - g) * (1 + g2) * P * ((k - 1) * P + a) / (k * P + a));
  return s;
}

ld prop3_ref(int K, ld g, ld P, ld gamma) {
  const ld g2 = g * g, q = std::pow(g2, -gamma);
  ld s = std::log2(1 + P / ((K - 1) * g2 * P + 1)) + std::log2(1 + (K - 1) * std::pow(g2, gamma) * P);
  for (int k = 2; k <= K - 1; ++k)
    s += std::log2(1 + (1 - g) * (1 - g) * P / (1 - std::pow(g2, -(gamma - 1))) * ((k - 1) * P + q) / (k * P + q));
  return s;
}

}  // namespace

TEST_CASE("closed-form anchors") {
  const double g = std::sqrt(0.5);
  CHECK(prop1_closed(3, g, 10).sum_rate == doctest::Approx(6.2502).epsilon(1e-4));
  CHECK(prop2_closed(3, g, 10).sum_rate == doctest::Approx(6.6217).epsilon(1e-4));
  CHECK(prop3_closed(3, std::sqrt(2.0), 10, 2).sum_rate == doctest::Approx(8.1074).epsilon(1e-4));
}

TEST_CASE("closed forms against long-double summation") {
  for (int K : {3, 4, 10, 100, 1000})
    for (double g2 : {0.1, 0.5, 0.9})
      for (double P : {1.0, 10.0, 1000.0}) {
        const double g = std::sqrt(g2);
        CAPTURE(K);
        CAPTURE(g2);
        CAPTURE(P);
        CHECK(prop1_closed(K, g, P).sum_rate == doctest::Approx(static_cast<double>(prop1_ref(K, g, P))).epsilon(1e-11));
        CHECK(prop2_closed(K, g, P).sum_rate == doctest::Approx(static_cast<double>(prop2_ref(K, g, P))).epsilon(1e-11));
        const double h2 = 1 + g2 * 3, h = std::sqrt(h2);
        const double gamma = 1.5 * std::log(h2 + 1) / std::log(h2);
        CHECK(prop3_closed(K, h, P, gamma).sum_rate == doctest::Approx(static_cast<double>(prop3_ref(K, h, P, gamma))).epsilon(1e-11));
      }
}

TEST_CASE("closed forms equal the evaluators at the pinned parameters") {
  for (int K : {3, 4, 10, 100})
    for (double g2 : {0.3, 0.5, 0.9, 1.5})
      for (double P : {5.0, 10.0, 100.0}) {
        const cd g = std::sqrt(g2);
        CAPTURE(K);
        CAPTURE(g2);
        CAPTURE(P);
        if (g2 < 1) CHECK(std::abs(prop1_closed(K, g, P).sum_rate - thm5_bound(K, g, P, prop1_params(g)).sum_rate) < 1e-9);
        CHECK(std::abs(prop2_closed(K, g, P).sum_rate - thm6_bound(K, g, P, prop2_params(g)).sum_rate) < 1e-9);
        if (g2 > 1) {
          const BoundResult p3 = prop3_search(K, g, P);
          REQUIRE(p3.feasible);
          const double gamma = p3.params[0].second;
          CHECK(std::abs(p3.sum_rate - thm6_bound(K, g, P, prop3_params(g, gamma)).sum_rate) < 1e-9);
        }
      }
}

TEST_CASE("three-user reductions") {
  const double P = 10;
  const cd g = std::sqrt(0.5);
  const Channel c = make_symmetric(3, g, P, Field::real);
  for (double s : {0.71, 0.8, 0.95, 1.0})
    for (double r : {0.5, 0.71, 0.9}) {
      const NoiseParam N{s, r};
      KGenieConfig kc;
      kc.N = {N};
      const BoundResult a = thm5_bound(3, g, P, kc);
      const BoundResult b = thm2_bound(c, N, Thm2Branch::first, {0, 1, 2});
      CHECK(a.feasible == b.feasible);
      if (a.feasible && b.feasible) CHECK(std::abs(a.sum_rate - b.sum_rate) < 1e-9);

      const NoiseParam W{std::sqrt(0.9), 0.9};
      kc.W1 = kc.WK = W;
      const BoundResult t6 = thm6_bound(3, g, P, kc);
      const BoundResult t3 = thm3_bound(c, {{W, W, W}, {N, N, N}}, Thm3Branch::I0, {0, 1, 2});
      CHECK(t6.feasible == t3.feasible);
      if (t6.feasible && t3.feasible) CHECK(std::abs(t6.sum_rate - t3.sum_rate) < 1e-9);
    }
}

TEST_CASE("infeasible regions") {
  CHECK_FALSE(prop1_closed(5, std::sqrt(1.2), 10).feasible);
  CHECK_FALSE(thm5_bound(5, std::sqrt(1.2), 10, prop1_params(0.9)).feasible);
  const cd g = std::sqrt(2.0);
  CHECK_FALSE(prop3_gamma_feasible(g, 1.5));
  CHECK(prop3_gamma_feasible(g, 1.6));
  CHECK_FALSE(prop3_closed(3, g, 10, 1.2).feasible);
  CHECK_FALSE(prop3_closed(3, 0.5, 10, 2).feasible);
  // sigma_{V_{N_{K-1}}}^2 below |g|^2
  KGenieConfig kc;
  kc.N = {NoiseParam{0.5, 0.0}};
  CHECK_FALSE(thm5_bound(4, std::sqrt(0.5), 10, kc).feasible);
  CHECK_THROWS(thm5_bound(2, 0.5, 10, prop1_params(0.5)));
}

TEST_CASE("prop3 gamma grid") {
  const auto grid = prop3_gamma_grid();
  REQUIRE(grid.size() == 64);
  CHECK(grid.front() > 1.0);
  CHECK(grid.back() == doctest::Approx(200.0));
  for (std::size_t i = 1; i < grid.size(); ++i) CHECK(grid[i] > grid[i - 1]);
  const BoundResult r = prop3_search(10, std::sqrt(2.0), 10);
  for (double gamma : grid)
    if (prop3_gamma_feasible(std::sqrt(2.0), gamma)) CHECK(r.sum_rate <= prop3_closed(10, std::sqrt(2.0), 10, gamma).sum_rate);
}

TEST_CASE("closed_form_best") {
  const auto t0 = std::chrono::steady_clock::now();
  const BoundResult big = closed_form_best(100000, std::sqrt(0.9), 5);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(secs < 1.0);
  CHECK(big.normalized >= 0.016);
  CHECK(big.normalized <= 0.020);
  CHECK(big.normalized < kramer_two_user(5, std::sqrt(0.9), 100000).normalized);

  const BoundResult zero = closed_form_best(10, 0.0, 10);
  CHECK(zero.source == "kramer");
  CHECK(zero.normalized == doctest::Approx(0.5 * std::log2(11.0)));

  CHECK(closed_form_best(100, std::sqrt(2.0), 10).source == "prop3");
  CHECK(closed_form_best(100, std::sqrt(2.0), 100).source == "kramer");
  CHECK(closed_form_best(100, std::sqrt(0.5), 100).source != "prop3");
}

TEST_CASE("searched bounds improve on their seeds") {
  for (int K : {4, 6})
    for (double g2 : {0.3, 0.8}) {
      const cd g = std::sqrt(g2);
      const double P = 10;
      const BoundResult t5 = thm5_optimized(K, g, P, Field::real, OptProfile::light());
      const BoundResult t6 = thm6_optimized(K, g, P, Field::real, OptProfile::light());
      CHECK(t5.sum_rate <= prop1_closed(K, g, P).sum_rate + 1e-12);
      CHECK(t6.sum_rate <= prop2_closed(K, g, P).sum_rate + 1e-12);
      const double lb = K * lower_bounds(K, g, P).best;
      CHECK(t5.sum_rate >= lb - 1e-9);
      CHECK(t6.sum_rate >= lb - 1e-9);
    }
}

TEST_CASE("power offset and regimes") {
  CHECK(power_offset(std::sqrt(0.5)).ell_star == doctest::Approx(2.958).epsilon(1e-3));
  CHECK(power_offset(std::sqrt(2.0)).ell_star == doctest::Approx(2.543).epsilon(1e-3));
  const LargeKResult one = power_offset(1.0);
  CHECK_FALSE(one.finite);
  CHECK(std::isinf(one.ell_star));
  CHECK(power_offset(0.3).d_K == 1.0);

  const cd g = std::sqrt(0.5);
  const double ell = power_offset(g).ell_star;  // 3-dB units: thresholds near 8.9 and 17.8 dB
  CHECK(eta_regime(std::pow(10.0, 0.1), g).eta == 0.0);
  CHECK(eta_regime(std::pow(10.0, 0.1 * 3.0103 * ell * 1.5), g).eta == 1.0);
  CHECK(eta_regime(1e6, g).eta == 0.5);
  CHECK_THROWS_AS(eta_regime(0.0, g), DomainError);
}

TEST_CASE("affine approximation") {
  const cd g = std::sqrt(0.5);
  const double ell = power_offset(g).ell_star;
  CHECK(affine_approx(1000, std::exp2(ell), g) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(affine_approx(1000, 1e4, std::sqrt(2.0)) ==
        doctest::Approx(std::log2(1e4) - power_offset(std::sqrt(2.0)).ell_star).epsilon(1e-12));
  CHECK(std::isinf(affine_approx(10, 100, 1.0)));
  CHECK_THROWS_AS(affine_approx(10, 1.0, g), DomainError);

  // per-user closed form against log P - ell at K = 1000
  const double per_user = prop2_closed(1000, g, 1000).sum_rate / 1000;
  CHECK(std::abs(affine_approx(1000, 1000, g) - per_user) < 0.1 * per_user);
  for (double P : {1e3, 1e4, 1e5, 1e6})
    CHECK(std::abs(prop2_closed(1000, g, P).sum_rate / 1000 - affine_approx(1000, P, g)) < 0.05);
}

TEST_CASE("no jump across g^2 = 1") {
  for (int K : {100, 100000}) {
    std::vector<double> v;
    for (int i = 0; i <= 200; ++i) {
      const double g2 = 0.9 + 1e-3 * i;
      v.push_back(closed_form_best(K, std::sqrt(g2), 100).normalized);
    }
    for (std::size_t i = 2; i + 2 < v.size(); ++i) {
      const double local = std::max({std::abs(v[i - 1] - v[i - 2]), std::abs(v[i + 2] - v[i + 1]), 1e-12});
      CHECK(std::abs(v[i] - v[i - 1]) <= 10 * local + 1e-9);
    }
  }
}

TEST_CASE("asymmetric kub2b") {
  const double P = 10;
  const Channel sym = make_symmetric(4, std::sqrt(0.5), P, Field::real);
  const BoundResult r = asym_kub2b_optimized(sym);
  REQUIRE(r.feasible);
  CHECK(r.sum_rate >= 4 * lower_bounds(4, std::sqrt(0.5), P).best - 1e-9);
  CHECK(r.sum_rate <= kramer_two_user(P, std::sqrt(0.5), 4).sum_rate);

  CHECK_FALSE(asym_kub2b_optimized(make_symmetric(4, std::sqrt(1.2), P, Field::real)).feasible);
  CHECK_FALSE(asym_thm_kub2b(sym, 0.5, {0, 1, 2, 3}).feasible);
  CHECK(asym_thm_kub2b(sym, std::sqrt(0.5), {0, 1, 2, 3}).feasible);

  Channel mixed = make_symmetric(4, std::sqrt(0.5), P, Field::real);
  mixed.h(2, 0) = 1.3;
  const BoundResult m = asym_kub2b_optimized(mixed);
  CHECK(m.feasible);
  CHECK(std::norm(permuted(mixed, m.perm).h(0, 3)) <= 1.0 + 1e-12);
}

TEST_CASE("asymmetric kub3b") {
  const double P = 10;
  const Channel semi = make_semi_symmetric(3, {0.4, cd(0.3, 0.5)}, P);
  const BoundResult r = asym_kub3b_optimized(semi);
  REQUIRE(r.feasible);
  CHECK(std::isfinite(r.sum_rate));

  const Channel sym = make_symmetric(4, std::sqrt(0.5), P, Field::real);
  const BoundResult s = asym_kub3b_optimized(sym);
  REQUIRE(s.feasible);
  CHECK(s.sum_rate >= 4 * lower_bounds(4, std::sqrt(0.5), P).best - 1e-9);

  // sigma_N^2 below |h|^2 Var(Z - W) violates the constraint
  const std::vector<NoiseParam> W(4, NoiseParam{0.5, 0.0});
  CHECK_FALSE(asym_thm_kub3b(sym, W, std::vector<double>(4, 0.1), {0, 1, 2, 3}).feasible);
  CHECK_THROWS_AS(asym_thm_kub3b(sym, W, std::vector<double>(3, 0.1), {0, 1, 2, 3}), ConfigError);
}

TEST_CASE("chain bound on proportional channels") {
  const double P = 10;
  const cd g = std::sqrt(0.5);
  const Channel sym = make_symmetric(5, g, P, Field::real);
  for (double s : {0.75, 0.9, 1.0}) {
    const NoiseParam N{s, 0.8};
    KGenieConfig kc;
    kc.N = {N};
    const BoundResult a = chain_bound(sym, std::vector<NoiseParam>(5, N), {0, 1, 2, 3, 4});
    const BoundResult b = thm5_bound(5, g, P, kc);
    CHECK(a.feasible == b.feasible);
    if (a.feasible && b.feasible) CHECK(std::abs(a.sum_rate - b.sum_rate) < 1e-9);
  }

  std::vector<cd> H = {1, 0.2, 0.5, 0.0, 0.3, 1, 0.4, 0.6, 0.7, 0.2, 1, 0.3, 0.1, 0.5, 0.2, 1};
  H[3] = H[2] / H[6] * H[7];
  const Channel ok = make_channel(4, H, {P, P, P, P}, Field::real);
  const BoundResult c = chain_optimized(ok);
  REQUIRE(c.feasible);
  CHECK(c.sum_rate >= std::log2(1 + 4 * P) - 1e-9);

  H[3] *= 1.1;
  CHECK_FALSE(chain_optimized(make_channel(4, H, {P, P, P, P}, Field::real)).feasible);
}

TEST_CASE("best_upper_k dispatch") {
  const double P = 10;
  const BoundResult three = best_upper_k(make_symmetric(3, std::sqrt(0.5), P, Field::real), OptProfile::light());
  CHECK(three.sum_rate ==
        doctest::Approx(best_upper_three(make_symmetric(3, std::sqrt(0.5), P, Field::real), OptProfile::light()).sum_rate));
  const BoundResult big = best_upper_k(make_symmetric(1200, std::sqrt(0.9), 5, Field::real), OptProfile::light());
  CHECK(big.feasible);
  CHECK(big.source == closed_form_best(1200, std::sqrt(0.9), 5).source);
  CHECK(default_labelings(5).size() == 120);
  CHECK(default_labelings(6).size() == 1);
}
