#include "gicbound/baselines.hpp"

#include <algorithm>
#include <cmath>

#include "gicbound/optimize.hpp"
#include "net.hpp"
#include "wide.hpp"

namespace gicb {

double kramer_per_user(double P, cd g) {
  const double g2 = std::norm(g);
  if (std::abs(g) < 1.0) return 0.5 * std::log2(1.0 + P) + 0.5 * std::log2(1.0 + P / (1.0 + g2 * P));
  return 0.5 * std::log2(1.0 + P + g2 * P);
}

double etw_per_user(double P, cd g) {
  const double inr = std::norm(g) * P;
  return std::log2(1.0 + inr + P / (1.0 + inr));
}

BoundResult kramer_two_user(double P, cd g, int K) {
  if (P < 0.0) throw DomainError("power must be nonnegative");
  return feasible_result("kramer", K, K * kramer_per_user(P, g));
}

BoundResult etw_two_user(double P, cd g, int K) {
  if (P < 0.0) throw DomainError("power must be nonnegative");
  return feasible_result("etw", K, K * etw_per_user(P, g));
}

double gen_kramer_form(cd g, cd rho) {
  const double d = 1.0 - std::norm(rho);
  if (d <= 0.0) return kInfinity;
  return 2.0 * std::norm(g) * (1.0 - rho.real()) / d;
}

double gen_kramer_objective(double P, cd g, cd rho) {
  const wcd r = widen(rho);
  const wide d = 1 - norm(r);
  if (d <= 0) return kInfinity;
  if (gen_kramer_form(g, rho) < 1.0 - kConstraintTol) return kInfinity;
  const wcd gw = widen(g);
  const wide Pw = P;
  const wide g2 = norm(gw);
  const wcd c = conj(gw) * (gw + wcd{1, 0}) * wcd{Pw, 0} + conj(r);
  const wide tail = Pw + g2 * Pw + 1 - norm(c) / (2 * g2 * Pw + 1);
  if (tail <= 0) return kInfinity;
  return std::log2(static_cast<double>((Pw + 2 * g2 * Pw + 1) / d * tail));
}

BoundResult gen_kramer_three(const Channel& ch) {
  if (ch.K != 3 || !is_symmetric(ch)) throw ConfigError("generalized Kramer bound needs a symmetric three-user channel");
  const cd g = ch.h(0, 1);
  const double P = ch.P[0];
  BoundResult r;
  cd rho;
  double value;
  if (ch.field == Field::real) {
    const ScalarSearch s = minimize_scalar(
        [&](double x) { return gen_kramer_objective(P, g, x); }, -1.0, 1.0, 401);
    rho = s.x;
    value = s.value;
  } else {
    const DiskSearch s = minimize_disk([&](cd x) { return gen_kramer_objective(P, g, x); }, 201, 64);
    rho = s.rho;
    value = s.value;
  }
  if (!std::isfinite(value)) return infeasible_result("genkramer", 3);
  r = feasible_result("genkramer", 3, value);
  r.params = {{"rho_re", rho.real()}, {"rho_im", rho.imag()}};
  return r;
}

BoundResult z_extension_three(const Channel& ch, const std::vector<int>& perm) {
  if (ch.K != 3) throw ConfigError("z-extension bound needs three users");
  const Channel c = permuted(ch, perm);
  BoundResult r = infeasible_result("zext", 3);
  r.perm = perm;
  const double lim = 1.0 + kConstraintTol;
  if (std::norm(c.h(0, 1)) > lim || std::norm(c.h(1, 2)) > lim || std::norm(c.h(2, 0)) > lim) return r;
  const Net n(c);
  const auto& X = n.X;
  const auto& Y = n.Y;
  const double s = n.mi({X[0]}, {Y[0]}, {X[1], X[2]}) + n.mi({X[0]}, {Y[0]}, {X[2]}) +
                   n.mi({X[1]}, {Y[1]}, {X[2], X[0]}) + n.mi({X[1]}, {Y[1]}, {X[0]}) +
                   n.mi({X[2]}, {Y[2]}, {X[0], X[1]}) + n.mi({X[2]}, {Y[2]}, {X[1]});
  BoundResult out = feasible_result("zext", 3, 0.5 * s);
  out.perm = perm;
  return out;
}

BoundResult z_extension_three(const Channel& ch) {
  BoundResult best = infeasible_result("zext", 3);
  for (const auto& p : all_permutations(3)) {
    BoundResult r = z_extension_three(ch, p);
    if (better(r, best)) best = r;
  }
  return best;
}

LowerBounds lower_bounds(int K, cd g, double P) {
  if (K < 1) throw DomainError("K must be positive");
  const double g2 = std::norm(g);
  LowerBounds lb;
  lb.tin = std::log2(1.0 + P / (1.0 + (K - 1) * g2 * P));
  lb.tdm = std::log2(1.0 + K * P) / K;
  lb.snd = kInfinity;
  for (int s = 1; s <= K; ++s)
    lb.snd = std::min(lb.snd, std::log2(1.0 + P + (s - 1) * g2 * P) / s);
  lb.best = std::max({lb.tin, lb.tdm, lb.snd});
  return lb;
}

}  // namespace gicb
