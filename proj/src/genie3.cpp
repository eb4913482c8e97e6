#include "gicbound/genie3.hpp"

#include <cmath>

#include "gicbound/baselines.hpp"
#include "net.hpp"
#include "wide.hpp"

namespace gicb {

namespace {

constexpr double kLim = 1.0 + kConstraintTol;

void check_three(const Channel& ch) {
  if (ch.K != 3) throw ConfigError("three-user bound applied to a channel with K != 3");
}

void push_noise(BoundResult& r, const std::string& tag, const NoiseParam& n) {
  r.params.emplace_back(tag + "_sigma", n.sigma);
  r.params.emplace_back(tag + "_rho_re", n.rho.real());
  r.params.emplace_back(tag + "_rho_im", n.rho.imag());
}

// Noise sqrt(v_cond / |h|^2 - v_res) added to the residual penalty signal.
// Returns false when the variance is negative beyond tolerance.
bool penalty_noise_var(double v_cond, cd h, double v_res, double& out) {
  const double h2 = std::norm(h);
  out = v_cond / h2 - v_res;
  if (out < -kConstraintTol) return false;
  out = std::max(0.0, out);
  return true;
}

}  // namespace

BoundResult thm1_bound(const Channel& ch, const Noise3& W, const std::vector<int>& perm) {
  check_three(ch);
  const Channel c = permuted(ch, perm);
  BoundResult bad = infeasible_result("thm1", 3);
  bad.perm = perm;
  if (std::norm(c.h(0, 1)) > kLim || std::norm(c.h(1, 2)) > kLim || std::norm(c.h(2, 0)) > kLim) return bad;

  std::array<double, 3> vD{}, vV{};
  for (int k = 0; k < 3; ++k) {
    vD[k] = var_z_minus(W[k]);
    vV[k] = var_n_given(W[k]);
  }
  // V_{W_j} scaled by h_{j,r} against the residual noise of receiver r, j = r-1.
  std::array<double, 3> tv{};
  std::array<bool, 3> silent{};
  for (int r = 0; r < 3; ++r) {
    const int j = (r + 2) % 3;
    const cd h = c.h(j, r);
    if (vV[j] < std::norm(h) * vD[r] - kConstraintTol) return bad;
    silent[r] = std::norm(h) < kSingularEps;
    if (!silent[r] && !penalty_noise_var(vV[j], h, vD[r], tv[r])) return bad;
  }

  Net n(c);
  std::array<GaussVar, 3> Wv, U, D;
  for (int k = 0; k < 3; ++k) {
    Wv[k] = n.sys.correlated_pair(W[k].sigma, W[k].rho, n.Z[k]);
    U[k] = n.interference(k) + Wv[k];
    D[k] = n.Z[k] - Wv[k];
  }
  double s = 0.0;
  for (int r = 0; r < 3; ++r) {
    const GaussVar& xc = n.X[(r + 2) % 3];
    s += n.mi({n.X[r]}, {n.Y[r]}, {xc, U[r]});
    s += n.mi({n.X[r]}, {n.Y[r]}, {xc});
    if (!silent[r]) {
      const GaussVar vt = n.sys.latent(std::sqrt(tv[r]));
      s += n.mi({U[r]}, {n.X[r] + D[r] + vt}, {xc});
    }
  }
  BoundResult r = feasible_result("thm1", 3, 0.5 * s);
  r.perm = perm;
  for (int k = 0; k < 3; ++k) push_noise(r, "W" + std::to_string(k + 1), W[k]);
  return r;
}

double thm2_mutual_info(const Channel& ch, const NoiseParam& N2, const std::vector<int>& perm) {
  check_three(ch);
  const Channel c = permuted(ch, perm);
  Net n(c);
  const GaussVar N = n.sys.correlated_pair(N2.sigma, N2.rho, n.Z[1]);
  const GaussVar S = c.h(0, 1) * n.X[1] + c.h(0, 2) * n.X[2] + N;
  return n.mi({n.X[0]}, {n.Y[0]}) + n.mi({n.X[1]}, {n.Y[1], S}, {n.X[0]}) +
         n.mi({n.X[2]}, {n.Y[2]}, {n.X[0], n.X[1]});
}

BoundResult thm2_bound(const Channel& ch, const NoiseParam& N2, Thm2Branch branch,
                       const std::vector<int>& perm) {
  check_three(ch);
  const Channel c = permuted(ch, perm);
  BoundResult bad = infeasible_result("thm2", 3);
  bad.perm = perm;
  const cd h12 = c.h(0, 1), h13 = c.h(0, 2), h23 = c.h(1, 2);
  const double P1 = c.P[0], P2 = c.P[1], P3 = c.P[2];

  // h(h13 X3 + N2, h23 X3 + Z2) = log vd + log(|h|^2 P3 + vv) per branch.
  double vv, hb2;
  if (branch == Thm2Branch::first) {
    if (std::abs(h13) < kSingularEps) return bad;
    vv = var_n_given(N2, h23 / h13);
    hb2 = std::norm(h13);
  } else {
    if (std::abs(h23) < kSingularEps) return bad;
    vv = var_z_given(N2, h13 / h23);
    hb2 = std::norm(h23);
  }
  if (vv < hb2 - kConstraintTol || vv > kLim) return bad;

  // The value itself is formed in extended precision: at N2 -> Z2 both vd
  // and the conditional variance of Y2 vanish together.
  const wide sw = N2.sigma, s2w = sw * sw;
  const wcd rw = widen(N2.rho);
  const wcd cw = branch == Thm2Branch::first ? widen(h23 / h13) : widen(h13 / h23);
  wide vdw, vvw;
  if (branch == Thm2Branch::first) {
    vdw = 1 - 2 * sw * (cw * rw).re + norm(cw) * s2w;
    const wcd cov = wcd{rw.re * sw, rw.im * sw} + wcd{-cw.re * s2w, cw.im * s2w};
    vvw = vdw < kSingularEps ? s2w : s2w - norm(cov) / vdw;
  } else {
    vdw = s2w - 2 * sw * (conj(cw) * rw).re + norm(cw);
    const wcd cov = wcd{rw.re * sw - cw.re, -rw.im * sw + cw.im};
    vvw = vdw < kSingularEps ? wide(1) : 1 - norm(cov) / vdw;
  }
  const wcd w12 = widen(h12), w13 = widen(h13), w23 = widen(h23);
  const wide P2w = P2, P3w = P3;
  const wide vS = norm(w12) * P2w + norm(w13) * P3w + s2w;
  const wcd cov = conj(w12) * wcd{P2w, 0} + w23 * conj(w13) * wcd{P3w, 0} + conj(rw) * wcd{sw, 0};
  const wide vY = P2w + norm(w23) * P3w + 1 - norm(cov) / vS;
  const wide inner = static_cast<wide>(hb2) * P3w + vvw;
  double value;
  if (vdw < kSingularEps || vS < kSingularEps || vY <= 0 || inner < kSingularEps) {
    value = thm2_mutual_info(ch, N2, perm);
  } else {
    value = std::log2(1.0 + P1 / (std::norm(h12) * P2 + std::norm(h13) * P3 + 1.0)) +
            std::log2(static_cast<double>(vS * vY / (vdw * inner))) + std::log2(1.0 + P3);
  }
  BoundResult r = feasible_result("thm2", 3, value);
  r.perm = perm;
  r.params.emplace_back("branch", branch == Thm2Branch::first ? 1.0 : 2.0);
  push_noise(r, "N2", N2);
  return r;
}

BoundResult thm3_bound(const Channel& ch, const GenieConfig3& cfg, Thm3Branch branch,
                       const std::vector<int>& perm) {
  check_three(ch);
  const Channel c = permuted(ch, perm);
  BoundResult bad = infeasible_result("thm3", 3);
  bad.perm = perm;

  std::array<double, 3> tv{};
  for (int a = 0; a < 3; ++a) {
    const int b = (a + 1) % 3, cc = (a + 2) % 3;
    const double vVWa = var_n_given(cfg.W[a]);
    const double vDc = var_z_minus(cfg.W[cc]);
    const NoiseParam& Nb = cfg.N[b];
    if (branch == Thm3Branch::I0) {
      const cd hac = c.h(a, cc);
      if (std::abs(hac) < kSingularEps) return bad;
      const double vV = var_n_given(Nb, c.h(b, cc) / hac);
      if (vVWa < Nb.sigma * Nb.sigma - kConstraintTol) return bad;
      if (vV < std::norm(hac) * vDc - kConstraintTol) return bad;
      if (!penalty_noise_var(vV, hac, vDc, tv[a])) return bad;
    } else {
      const cd hbc = c.h(b, cc);
      if (std::abs(hbc) < kSingularEps) return bad;
      const double vV = var_z_given(Nb, c.h(a, cc) / hbc);
      const double sW = cfg.W[a].sigma;
      if (vVWa < sW * sW - kConstraintTol) return bad;
      if (vV < std::norm(hbc) * vDc - kConstraintTol) return bad;
      if (!penalty_noise_var(vV, hbc, vDc, tv[a])) return bad;
    }
  }

  Net n(c);
  std::array<GaussVar, 3> Wv, Nv;
  for (int k = 0; k < 3; ++k) {
    Wv[k] = n.sys.correlated_pair(cfg.W[k].sigma, cfg.W[k].rho, n.Z[k]);
    Nv[k] = n.sys.correlated_pair(cfg.N[k].sigma, cfg.N[k].rho, n.Z[k]);
  }
  double s = 0.0;
  for (int a = 0; a < 3; ++a) {
    const int b = (a + 1) % 3, cc = (a + 2) % 3;
    const GaussVar S = c.h(a, b) * n.X[b] + c.h(a, cc) * n.X[cc] + Nv[b];
    const GaussVar U = n.interference(cc) + Wv[cc];
    s += n.mi({n.X[a]}, {n.Y[a]});
    s += n.mi({n.X[b]}, {n.Y[b], S}, {n.X[a]});
    s += n.mi({n.X[cc]}, {n.Y[cc]}, {U});
    const GaussVar vt = n.sys.latent(std::sqrt(tv[a]));
    s += n.mi({U}, {n.X[cc] + n.Z[cc] - Wv[cc] + vt});
  }
  BoundResult r = feasible_result("thm3", 3, s / 3.0);
  r.perm = perm;
  r.params.emplace_back("branch", branch == Thm3Branch::I0 ? 0.0 : 1.0);
  for (int k = 0; k < 3; ++k) push_noise(r, "W" + std::to_string(k + 1), cfg.W[k]);
  for (int k = 0; k < 3; ++k) push_noise(r, "N" + std::to_string(k + 1), cfg.N[k]);
  return r;
}

double thm4_R(double P, cd g, const NoiseParam& N, const NoiseParam& W) {
  const wcd gw = widen(g);
  const wide Pw = P;
  const wide g2 = norm(gw);
  const wide den = g2 * var_z_minus_wide(N) * var_z_minus_wide(W);
  if (den < kSingularEps) return kInfinity;
  const wide sn = N.sigma;
  const wcd cov = conj(gw) * (gw + wcd{1, 0}) * wcd{Pw, 0} + wcd{sn, 0} * conj(widen(N.rho));
  const wide tail = Pw + g2 * Pw + 1 - norm(cov) / (2 * g2 * Pw + sn * sn);
  if (tail <= 0) return kInfinity;
  return std::log2(static_cast<double>((Pw + 2 * g2 * Pw + 1) / den * tail));
}

bool thm4_r0_params(cd g, double s, NoiseParam& N, NoiseParam& W) {
  if (!(s > 0.0 && s <= 1.0)) return false;
  const double T = 4.0 * std::norm(g) * (1.0 - s * s);
  const double arg = (T - 1.0) * (T - s * s);
  if (arg < 0.0) return false;
  const double rho = (T - std::sqrt(arg)) / s;
  if (std::abs(rho) > 1.0) return false;
  N = {s, rho};
  W = {1.0, 2.0 * s * s - 1.0};
  return true;
}

bool thm4_r1_params(cd g, cd rho, NoiseParam& N, NoiseParam& W) {
  if (std::norm(rho) >= 1.0) return false;
  const double form = gen_kramer_form(g, rho);
  if (!(form >= 1.0 - kConstraintTol)) return false;
  const double rw = std::sqrt(std::max(0.0, 1.0 - 1.0 / form));
  N = {1.0, rho};
  W = {rw, rw};
  return true;
}

Thm4Result thm4_symmetric(double P, cd g, Field field) {
  Thm4Result out;
  auto r0f = [&](double s) {
    NoiseParam N, W;
    return thm4_r0_params(g, s, N, W) ? thm4_R(P, g, N, W) : kInfinity;
  };
  const ScalarSearch s0 = minimize_scalar(r0f, 0.0, 1.0, 401);
  out.r0 = std::isfinite(s0.value) ? feasible_result("thm4_r0", 3, s0.value) : infeasible_result("thm4_r0", 3);
  out.r0.params = {{"sigma_N", s0.x}};

  auto r1f = [&](cd rho) {
    NoiseParam N, W;
    return thm4_r1_params(g, rho, N, W) ? thm4_R(P, g, N, W) : kInfinity;
  };
  cd rho1;
  double v1;
  if (field == Field::real) {
    const ScalarSearch s1 = minimize_scalar([&](double x) { return r1f(x); }, -1.0, 1.0, 401);
    rho1 = s1.x;
    v1 = s1.value;
  } else {
    const DiskSearch s1 = minimize_disk(r1f, 201, 64);
    rho1 = s1.rho;
    v1 = s1.value;
  }
  out.r1 = std::isfinite(v1) ? feasible_result("thm4_r1", 3, v1) : infeasible_result("thm4_r1", 3);
  out.r1.params = {{"rho_N_re", rho1.real()}, {"rho_N_im", rho1.imag()}};

  out.best = better(out.r0, out.r1) ? out.r0 : out.r1;
  out.best.source = out.best.name;
  out.best.name = "thm4";
  return out;
}

std::vector<std::vector<int>> distinct_labelings3(const Channel& ch) {
  if (is_symmetric(ch)) return {{0, 1, 2}};
  if (is_circulant(ch)) return {{0, 1, 2}, {0, 2, 1}};
  return all_permutations(3);
}

namespace {

template <typename Eval>
BoundResult optimize_over_labelings(const Channel& ch, const std::string& name, std::size_t blocks,
                                    const OptProfile& prof, Eval eval,
                                    const std::vector<std::vector<NoiseParam>>& seeds = {}) {
  BoundResult best = infeasible_result(name, 3);
  for (const auto& perm : distinct_labelings3(ch)) {
    auto f = [&](const std::vector<NoiseParam>& p) { return eval(p, perm).sum_rate; };
    const NoiseSearch s = minimize_noise(f, blocks, ch.field, prof, seeds);
    if (!std::isfinite(s.value)) continue;
    BoundResult r = eval(s.params, perm);
    if (better(r, best)) best = r;
  }
  return best;
}

Noise3 expand3(const std::vector<NoiseParam>& p, std::size_t off = 0) {
  if (p.size() - off >= 3) return {p[off], p[off + 1], p[off + 2]};
  return {p[off], p[off], p[off]};
}

}  // namespace

BoundResult thm1_optimized(const Channel& ch, const OptProfile& prof) {
  check_three(ch);
  const std::size_t blocks = is_circulant(ch) ? 1 : 3;
  return optimize_over_labelings(ch, "thm1", blocks, prof,
                                 [&](const std::vector<NoiseParam>& p, const std::vector<int>& perm) {
                                   return thm1_bound(ch, expand3(p), perm);
                                 });
}

BoundResult thm2_optimized(const Channel& ch, const OptProfile& prof) {
  check_three(ch);
  auto eval = [&](const std::vector<NoiseParam>& p, const std::vector<int>& perm) {
    BoundResult a = thm2_bound(ch, p[0], Thm2Branch::first, perm);
    if (a.feasible) return a;
    return thm2_bound(ch, p[0], Thm2Branch::second, perm);
  };
  // N2 = Z2 is the natural degenerate candidate.
  return optimize_over_labelings(ch, "thm2", 1, prof, eval, {{NoiseParam{1.0, 1.0}}});
}

BoundResult thm3_optimized(const Channel& ch, Thm3Branch branch, const OptProfile& prof) {
  check_three(ch);
  std::vector<std::vector<NoiseParam>> seeds;
  if (is_symmetric(ch)) {
    const cd g = ch.h(0, 1);
    const Thm4Result t4 = thm4_symmetric(ch.P[0], g, ch.field);
    NoiseParam N, W;
    if (branch == Thm3Branch::I0 && t4.r0.feasible && thm4_r0_params(g, t4.r0.params[0].second, N, W))
      seeds.push_back({W, N});
    const cd rho1{t4.r1.params[0].second, t4.r1.params[1].second};
    if (branch == Thm3Branch::I1 && t4.r1.feasible && thm4_r1_params(g, rho1, N, W))
      seeds.push_back({W, N});
  }
  // Tied parameters: one W and one N shared by all users.
  auto eval = [&](const std::vector<NoiseParam>& p, const std::vector<int>& perm) {
    GenieConfig3 cfg{expand3({p[0]}), expand3({p[1]})};
    return thm3_bound(ch, cfg, branch, perm);
  };
  return optimize_over_labelings(ch, "thm3", 2, prof, eval, seeds);
}

BoundResult thm3_optimized(const Channel& ch, const OptProfile& prof) {
  const BoundResult a = thm3_optimized(ch, Thm3Branch::I0, prof);
  const BoundResult b = thm3_optimized(ch, Thm3Branch::I1, prof);
  return better(a, b) ? a : b;
}

BoundResult new_upper_three(const Channel& ch, const OptProfile& prof) {
  BoundResult best = infeasible_result("new_upper", 3);
  for (BoundResult r : {thm1_optimized(ch, prof), thm2_optimized(ch, prof), thm3_optimized(ch, prof)})
    if (better(r, best)) best = r;
  best.source = best.name;
  best.name = "new_upper";
  return best;
}

BoundResult best_upper_three(const Channel& ch, const OptProfile& prof) {
  check_three(ch);
  std::vector<BoundResult> parts = {thm1_optimized(ch, prof), thm2_optimized(ch, prof),
                                    thm3_optimized(ch, prof), z_extension_three(ch)};
  if (is_symmetric(ch)) {
    const cd g = ch.h(0, 1);
    parts.push_back(kramer_two_user(ch.P[0], g, 3));
    parts.push_back(etw_two_user(ch.P[0], g, 3));
    parts.push_back(gen_kramer_three(ch));
  }
  BoundResult best = infeasible_result("best_upper", 3);
  for (const BoundResult& r : parts)
    if (better(r, best)) best = r;
  best.source = best.name;
  best.name = "best_upper";
  return best;
}

}  // namespace gicb
