#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "gicbound/baselines.hpp"
#include "gicbound/genie3.hpp"
#include "gicbound/kuser.hpp"
#include "gicbound/sweep.hpp"
#include "oracle.hpp"

using namespace gicb;

namespace {

int failures = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(int id, bool ok, const std::string& detail) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

// Median wall time of `reps` calls, in seconds.
double timed(const std::function<void()>& fn, int reps = 101) {
  std::vector<double> t;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    t.push_back(seconds_since(t0));
  }
  std::nth_element(t.begin(), t.begin() + reps / 2, t.end());
  return t[reps / 2];
}

void tdm_anchor() {
  double v = 0;
  const double dt = timed([&] { v = lower_bounds(3, 0.5, 10).tdm / 2; });
  report(1, std::abs(v - 0.8257) <= 1e-4 && dt < 1e-3, fmt("normalized TDM %.6f, %.2e s", v, dt));
}

void kramer_anchor() {
  double v = 0;
  const double dt = timed([&] { v = kramer_two_user(5, std::sqrt(0.9), 3).normalized; });
  report(2, std::abs(v - 0.8795) <= 5e-4 && dt < 1e-3, fmt("normalized Kramer %.6f, %.2e s", v, dt));
}

void large_k() {
  const auto t0 = std::chrono::steady_clock::now();
  const BoundResult r = closed_form_best(100000, std::sqrt(0.9), 5);
  const double dt = seconds_since(t0);
  report(3, r.normalized >= 0.016 && r.normalized <= 0.020 && dt < 1.0,
         fmt("normalized closed_form_best %.6f, %.3f s", r.normalized, dt));
}

void tight_capacity() {
  const BoundResult r = best_upper_three(make_symmetric(3, cd(0, 1), 10, Field::complex));
  const double target = 0.25 * std::log2(21.0);
  report(4, std::abs(r.normalized - 1.0981) <= 0.01 && std::abs(r.normalized - target) <= 0.01,
         fmt("normalized best upper %.6f vs %.6f", r.normalized, target));
}

void unit_gain() {
  const Channel c = make_symmetric(3, 1.0, 10, Field::real);
  const BoundResult t2 = thm2_optimized(c);
  const BoundResult best = best_upper_three(c);
  const double tdm = lower_bounds(3, 1.0, 10).tdm / 2;
  const double gap = std::max(std::abs(t2.normalized - tdm), std::abs(best.normalized - tdm));
  report(5, gap <= 1e-6, fmt("thm2 %.9f, best %.9f, TDM %.9f", t2.normalized, best.normalized, tdm));
}

void r1_equivalence() {
  double worst = 0;
  for (double g2 : {0.2, 0.5, 0.9, 1.2})
    for (double P : {1.0, 10.0, 100.0}) {
      const cd g = std::sqrt(g2);
      const Thm4Result t = thm4_symmetric(P, g, Field::real);
      const BoundResult gk = gen_kramer_three(make_symmetric(3, g, P, Field::real));
      worst = std::max(worst, std::abs(t.r1.sum_rate - gk.sum_rate) / 6);
      for (double rho = -0.95; rho < 0.96; rho += 0.05) {
        NoiseParam N, W;
        if (!thm4_r1_params(g, rho, N, W)) continue;
        worst = std::max(worst, std::abs(thm4_R(P, g, N, W) - gen_kramer_objective(P, g, rho)) / 6);
      }
    }
  report(6, worst <= 1e-6, fmt("max normalized |R1 - genKramer| %.3e", worst));
}

void closed_form_consistency() {
  double worst = 0;
  for (int K : {3, 4, 10, 100})
    for (double g2 : {0.3, 0.5, 0.9, 1.5})
      for (double P : {5.0, 10.0, 100.0}) {
        const cd g = std::sqrt(g2);
        if (g2 < 1)
          worst = std::max(worst, std::abs(prop1_closed(K, g, P).sum_rate - thm5_bound(K, g, P, prop1_params(g)).sum_rate));
        worst = std::max(worst, std::abs(prop2_closed(K, g, P).sum_rate - thm6_bound(K, g, P, prop2_params(g)).sum_rate));
        if (g2 > 1) {
          const BoundResult p3 = prop3_search(K, g, P);
          const double gamma = p3.params[0].second;
          worst = std::max(worst, std::abs(p3.sum_rate - thm6_bound(K, g, P, prop3_params(g, gamma)).sum_rate));
        }
      }
  report(7, worst <= 1e-9, fmt("max |closed form - evaluator| %.3e bits", worst));
}

void dominance() {
  bool interval_all = true, order_ok = true;
  double worst = INFINITY;
  std::string spans;
  for (double P : {10.0, 100.0}) {
    const std::vector<double> grid = axis_grid(Axis::alpha, -1.0, 2.0, 0.05);
    std::vector<bool> wins(grid.size(), false);
    std::vector<std::vector<BoundResult>> res(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
      Scenario sc;
      sc.K = 3;
      sc.P = P;
      sc.g1 = alpha_to_gain(grid[i], P);
      res[i] = evaluate_bounds(sc, {"new_upper", "kramer", "etw", "genkramer", "zext", "best_upper", "best_lower"});
    }
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const auto& r = res[i];
      double base = INFINITY;
      for (int b = 1; b <= 4; ++b)
        if (r[b].feasible) base = std::min(base, r[b].normalized);
      wins[i] = r[0].feasible && r[0].normalized < base;
      worst = std::min(worst, r[5].normalized - r[6].normalized);
      if (r[5].normalized < r[6].normalized - 1e-9) order_ok = false;
    }
    // longest run of consecutive wins
    std::size_t best_len = 0, best_at = 0;
    for (std::size_t i = 0, len = 0; i < grid.size(); ++i) {
      len = wins[i] ? len + 1 : 0;
      if (len > best_len) best_len = len, best_at = i + 1 - len;
    }
    if (best_len < 2) interval_all = false;
    spans += fmt("P=%g: alpha in [%.2f, %.2f]; ", P, best_len ? grid[best_at] : NAN,
                 best_len ? grid[best_at + best_len - 1] : NAN);
  }
  report(8, interval_all && order_ok, spans + fmt("min(best upper - best lower) %.3e", worst));
}

void gaussian_suite() {
  double worst = 0;
  System cs(Field::complex), rs(Field::real);
  const double pe = std::log2(std::acos(-1.0) * std::exp(1.0));
  worst = std::max(worst, std::abs(entropy({cs.latent()}, Field::complex) - pe));
  worst = std::max(worst, std::abs(entropy({rs.latent()}, Field::real) - 0.5 * std::log2(2 * std::acos(-1.0) * std::exp(1.0))));
  const bool closed_ok = worst <= 1e-12;

  std::mt19937_64 rng(20240917);
  double prop = 0;
  bool nonneg = true;
  for (int trial = 0; trial < 100; ++trial) {
    const Field f = trial % 2 ? Field::real : Field::complex;
    const auto v = oracle::random_system(rng, 8, 7, f).vars;
    const std::vector<GaussVar> A{v[0], v[1]}, B{v[2]}, C{v[3], v[4]}, D{v[5], v[6]};
    const double iab_c = mutual_info(A, B, C, f);
    const double iad_bc = mutual_info(A, D, oracle::cat(B, C), f);
    nonneg = nonneg && iab_c >= -1e-9 && iad_bc >= -1e-9;
    prop = std::max(prop, std::abs(iab_c + iad_bc - mutual_info(A, oracle::cat(B, D), C, f)));
    const std::vector<GaussVar> C2{v[4], v[3], v[3], 2.0 * v[3] - 0.5 * v[4]};
    prop = std::max(prop, std::abs(mutual_info(A, B, C2, f) - iab_c));
  }
  report(9, closed_ok && nonneg && prop <= 1e-9,
         fmt("entropy error %.2e, chain/invariance error %.2e, nonnegative %g", worst, prop, nonneg ? 1.0 : 0.0));
}

void continuity() {
  bool ok = true;
  double ratio = 0;
  for (int K : {100, 100000}) {
    std::vector<double> v;
    for (int i = 0; i <= 200; ++i) v.push_back(closed_form_best(K, std::sqrt(0.9 + 1e-3 * i), 100).normalized);
    for (std::size_t i = 2; i + 2 < v.size(); ++i) {
      const double local = std::max(std::abs(v[i - 1] - v[i - 2]), std::abs(v[i + 2] - v[i + 1]));
      const double jump = std::abs(v[i] - v[i - 1]);
      if (jump > 10 * local + 1e-9) ok = false;
      if (local > 0) ratio = std::max(ratio, jump / local);
    }
  }
  report(10, ok, fmt("largest step over local secant step %.3f", ratio));
}

}  // namespace

int main() {
  tdm_anchor();
  kramer_anchor();
  large_k();
  tight_capacity();
  unit_gain();
  r1_equivalence();
  closed_form_consistency();
  dominance();
  gaussian_suite();
  continuity();
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
