#include "gicbound/kuser.hpp"

#include <cmath>
#include <numeric>

#include "gicbound/baselines.hpp"
#include "gicbound/genie3.hpp"
#include "net.hpp"

namespace gicb {

namespace {

void check_k(int K) {
  if (K < 3) throw ConfigError("K-user bounds need K >= 3");
}

void push_noise(BoundResult& r, const std::string& tag, const NoiseParam& n) {
  r.params.emplace_back(tag + "_sigma", n.sigma);
  r.params.emplace_back(tag + "_rho_re", n.rho.real());
  r.params.emplace_back(tag + "_rho_im", n.rho.imag());
}

// log2(1 + c e^L) without overflow for large L.
double log2_1p_scaled_exp(double c, double L) {
  if (L < 600.0) return std::log2(1.0 + c * std::exp(L));
  return L / std::log(2.0) + std::log2(std::exp(-L) + c);
}

// Sum over k = 2..K-1 of log2(Var(Y_k | S_k, X_1^{k-1}) / Var(Z_k - N_k)).
// Returns NaN when some Z_k - N_k is degenerate.
double receiver_terms(int K, cd g, double P, const KGenieConfig& cfg) {
  const double a = std::norm(g) * P;
  const double d2 = std::norm(1.0 - g) * P;
  double s = 0.0;
  for (int k = 2; k <= K - 1; ++k) {
    const NoiseParam& n = cfg.n(k);
    const double vzn = var_z_minus(n);
    if (vzn < kSingularEps) return std::nan("");
    const double s2 = n.sigma * n.sigma;
    const cd c = (1.0 - g) * std::conj(g) * P + std::conj(n.rho) * n.sigma - s2;
    const double num = d2 + vzn - std::norm(c) / ((K - k + 1) * a + s2);
    s += std::log2(num / vzn);
  }
  return s;
}

// Paired terms sum_{k=2}^{K-2} log2(((K-k)a + s^2_{N_{k+1}}) / ((K-k)a + v_{N_k})).
double paired_terms(int K, double a, const KGenieConfig& cfg) {
  double s = 0.0;
  for (int k = 2; k <= K - 2; ++k) {
    const double num = (K - k) * a + cfg.n(k + 1).sigma * cfg.n(k + 1).sigma;
    const double den = (K - k) * a + var_n_given(cfg.n(k));
    s += std::log2(num / den);
  }
  return s;
}

bool chain_constraints(int K, const KGenieConfig& cfg) {
  for (int k = 2; k <= K - 2; ++k) {
    const double nxt = cfg.n(k + 1).sigma;
    if (var_n_given(cfg.n(k)) < nxt * nxt - kConstraintTol) return false;
  }
  return true;
}

}  // namespace

BoundResult thm5_bound(int K, cd g, double P, const KGenieConfig& cfg) {
  check_k(K);
  const double g2 = std::norm(g);
  if (g2 > 1.0 + kConstraintTol) return infeasible_result("thm5", K);
  if (!chain_constraints(K, cfg)) return infeasible_result("thm5", K);
  const double vlast = var_n_given(cfg.n(K - 1));
  if (vlast < g2 - kConstraintTol) return infeasible_result("thm5", K);
  const double a = g2 * P;
  const double rt = receiver_terms(K, g, P, cfg);
  if (std::isnan(rt)) return infeasible_result("thm5", K);
  const double s2 = cfg.n(2).sigma * cfg.n(2).sigma;
  const double s = std::log2(1.0 + P / ((K - 1) * a + 1.0)) + std::log2((K - 1) * a + s2) +
                   paired_terms(K, a, cfg) + std::log2(1.0 + P) - std::log2(a + vlast) + rt;
  BoundResult r = feasible_result("thm5", K, s);
  if (!r.feasible) return infeasible_result("thm5", K);
  push_noise(r, "N", cfg.n(2));
  return r;
}

BoundResult thm6_bound(int K, cd g, double P, const KGenieConfig& cfg) {
  check_k(K);
  const double g2 = std::norm(g);
  if (g2 < kSingularEps) return infeasible_result("thm6", K);
  const double a = g2 * P;
  const NoiseParam& W1 = cfg.W1;
  const NoiseParam& WK = cfg.WK;
  const double sN2 = cfg.n(2).sigma * cfg.n(2).sigma;
  const double vW1 = var_n_given(W1);
  if (vW1 < sN2 - kConstraintTol) return infeasible_result("thm6", K);
  if (!chain_constraints(K, cfg)) return infeasible_result("thm6", K);
  const double vlast = var_n_given(cfg.n(K - 1));
  const double vzwK = var_z_minus(WK);
  if (vlast < g2 * vzwK - kConstraintTol) return infeasible_result("thm6", K);
  const double vzw1 = var_z_minus(W1);
  if (vzw1 < kSingularEps) return infeasible_result("thm6", K);
  const double rt = receiver_terms(K, g, P, cfg);
  if (std::isnan(rt)) return infeasible_result("thm6", K);

  const double sW1 = W1.sigma * W1.sigma;
  const double sWK = WK.sigma * WK.sigma;
  const double c = std::norm(std::conj(WK.rho) * WK.sigma - sWK) / ((K - 1) * a + sWK);
  const double s = std::log2(1.0 + P / ((K - 1) * a + 1.0)) + std::log2(((K - 1) * a + sN2) / vzw1) +
                   std::log2(((K - 1) * a + sW1) / ((K - 1) * a + vW1)) + paired_terms(K, a, cfg) +
                   std::log2((P + vzwK - c) / (P + vlast / g2 - c)) - std::log2(g2) + rt;
  BoundResult r = feasible_result("thm6", K, s);
  if (!r.feasible) return infeasible_result("thm6", K);
  push_noise(r, "N", cfg.n(2));
  push_noise(r, "W", WK);
  return r;
}

KGenieConfig prop1_params(cd g) {
  const double m = std::abs(g);
  KGenieConfig c;
  c.N = {NoiseParam{m, m}};
  return c;
}

KGenieConfig prop2_params(cd g) {
  const double g2 = std::norm(g);
  const double m = std::sqrt(g2 / (1.0 + g2));
  KGenieConfig c;
  c.N = {NoiseParam{m, m}};
  c.W1 = c.WK = NoiseParam{m, m};
  return c;
}

KGenieConfig prop3_params(cd g, double gamma) {
  const double g2 = std::norm(g);
  const double w = std::sqrt(1.0 - std::pow(g2, -gamma));
  const double n = std::pow(g2, -0.5 * (gamma - 1.0));
  KGenieConfig c;
  c.N = {NoiseParam{n, n}};
  c.W1 = c.WK = NoiseParam{w, w};
  return c;
}

BoundResult prop1_closed(int K, cd g, double P) {
  check_k(K);
  const double g2 = std::norm(g);
  if (std::abs(g) >= 1.0) return infeasible_result("prop1", K);
  const double a = g2 * P;
  const double d = std::norm(1.0 - g) * P / (1.0 - g2);
  double s = std::log2(1.0 + P / ((K - 1) * a + 1.0)) + std::log2(1.0 + (K - 1) * P);
  for (int k = 2; k <= K - 1; ++k) s += std::log2(1.0 + d * ((k - 1) * P + 1.0) / (k * P + 1.0));
  return feasible_result("prop1", K, s);
}

BoundResult prop2_closed(int K, cd g, double P) {
  check_k(K);
  const double g2 = std::norm(g);
  const double a = g2 * P;
  const double q = 1.0 / (1.0 + g2);
  const double d = std::norm(1.0 - g) * (1.0 + g2) * P;
  double s = std::log2(1.0 + P / ((K - 1) * a + 1.0)) + std::log2(1.0 + (K - 1) * (1.0 + g2) * P);
  for (int k = 2; k <= K - 1; ++k) s += std::log2(1.0 + d * ((k - 1) * P + q) / (k * P + q));
  return feasible_result("prop2", K, s);
}

bool prop3_gamma_feasible(cd g, double gamma) {
  const double g2 = std::norm(g);
  if (!(g2 > 1.0) || !(gamma > 1.0)) return false;
  // |g|^{2 gamma} >= |g|^2 + 1
  return gamma * std::log(g2) >= std::log(g2 + 1.0) - 1e-15;
}

BoundResult prop3_closed(int K, cd g, double P, double gamma) {
  check_k(K);
  if (!prop3_gamma_feasible(g, gamma)) return infeasible_result("prop3", K);
  const double g2 = std::norm(g);
  const double a = g2 * P;
  const double L = gamma * std::log(g2);
  const double q = std::exp(-L);  // |g|^{-2 gamma}
  const double d = std::norm(1.0 - g) * P / (1.0 - g2 * q);
  double s = std::log2(1.0 + P / ((K - 1) * a + 1.0)) + log2_1p_scaled_exp((K - 1) * P, L);
  for (int k = 2; k <= K - 1; ++k) s += std::log2(1.0 + d * ((k - 1) * P + q) / (k * P + q));
  BoundResult r = feasible_result("prop3", K, s);
  r.params = {{"gamma", gamma}};
  return r;
}

std::vector<double> prop3_gamma_grid() {
  std::vector<double> out;
  for (int i = 1; i <= 64; ++i) out.push_back(std::pow(200.0, i / 64.0));
  return out;
}

BoundResult prop3_search(int K, cd g, double P) {
  BoundResult best = infeasible_result("prop3", K);
  for (double gamma : prop3_gamma_grid()) {
    if (!prop3_gamma_feasible(g, gamma)) continue;
    BoundResult r = prop3_closed(K, g, P, gamma);
    if (better(r, best)) best = r;
  }
  return best;
}

BoundResult closed_form_best(int K, cd g, double P) {
  std::vector<BoundResult> parts = {prop2_closed(K, g, P), kramer_two_user(P, g, K)};
  if (std::abs(g) < 1.0) parts.push_back(prop1_closed(K, g, P));
  if (std::abs(g) > 1.0) parts.push_back(prop3_search(K, g, P));
  BoundResult best = infeasible_result("closed_best", K);
  for (const BoundResult& r : parts)
    if (better(r, best)) best = r;
  best.source = best.name;
  best.name = "closed_best";
  return best;
}

BoundResult thm5_optimized(int K, cd g, double P, Field field, const OptProfile& prof) {
  check_k(K);
  if (std::norm(g) > 1.0 + kConstraintTol) return infeasible_result("thm5", K);
  auto f = [&](const std::vector<NoiseParam>& p) {
    KGenieConfig c;
    c.N = {p[0]};
    return thm5_bound(K, g, P, c).sum_rate;
  };
  const NoiseSearch s = minimize_noise(f, 1, field, prof, {prop1_params(g).N});
  if (!std::isfinite(s.value)) return infeasible_result("thm5", K);
  KGenieConfig c;
  c.N = {s.params[0]};
  return thm5_bound(K, g, P, c);
}

BoundResult thm6_optimized(int K, cd g, double P, Field field, const OptProfile& prof) {
  check_k(K);
  auto make = [](const std::vector<NoiseParam>& p) {
    KGenieConfig c;
    c.N = {p[0]};
    c.W1 = c.WK = p[1];
    return c;
  };
  auto f = [&](const std::vector<NoiseParam>& p) { return thm6_bound(K, g, P, make(p)).sum_rate; };
  std::vector<std::vector<NoiseParam>> seeds;
  const KGenieConfig p2 = prop2_params(g);
  seeds.push_back({p2.N[0], p2.W1});
  const BoundResult p3 = prop3_search(K, g, P);
  if (p3.feasible) {
    const KGenieConfig c3 = prop3_params(g, p3.params[0].second);
    seeds.push_back({c3.N[0], c3.W1});
  }
  const NoiseSearch s = minimize_noise(f, 2, field, prof, seeds);
  if (!std::isfinite(s.value)) return infeasible_result("thm6", K);
  return thm6_bound(K, g, P, make(s.params));
}

LargeKResult power_offset(cd g) {
  LargeKResult r;
  const double g2 = std::norm(g);
  const double d = std::norm(1.0 - g);
  if (d == 0.0) {
    r.ell_star = kInfinity;
    r.finite = false;
    return r;
  }
  r.ell_star = g2 <= 1.0 ? -std::log2(d * (1.0 + g2)) : -std::log2(d);
  return r;
}

LargeKResult eta_regime(double P, cd g) {
  if (!(P > 0.0)) throw DomainError("eta regime requires P > 0");
  LargeKResult r = power_offset(g);
  const double snr_db = 10.0 * std::log10(P);
  const double thr = 3.0103 * r.ell_star;
  if (snr_db <= thr)
    r.eta = 0.0;
  else if (snr_db <= 2.0 * thr)
    r.eta = 1.0;
  else
    r.eta = 0.5;
  return r;
}

double affine_approx(int /*K*/, double P, cd g) {
  if (!(P > 1.0)) throw DomainError("affine approximation requires P > 1");
  const LargeKResult r = power_offset(g);
  if (!r.finite) return -kInfinity;
  return std::log2(P) - r.ell_star;
}

std::vector<std::vector<int>> default_labelings(int K) {
  if (K <= 5) return all_permutations(K);
  std::vector<int> id(K);
  std::iota(id.begin(), id.end(), 0);
  return {id};
}

BoundResult asym_thm_kub2b(const Channel& ch, double sigma_N2, const std::vector<int>& perm) {
  check_k(ch.K);
  const int K = ch.K;
  const Channel c = permuted(ch, perm);
  BoundResult bad = infeasible_result("kub2b", K);
  bad.perm = perm;
  const double h1K = std::norm(c.h(0, K - 1));
  if (h1K > 1.0 + kConstraintTol) return bad;
  if (sigma_N2 < 0.0 || sigma_N2 > 1.0 || sigma_N2 * sigma_N2 < h1K - kConstraintTol) return bad;

  Net n(c);
  GaussVar S = n.sys.latent(sigma_N2);
  for (int i = 1; i < K; ++i) S += c.h(0, i) * n.X[i];
  std::vector<GaussVar> before = {n.X[0]};
  double s = n.mi({n.X[0]}, {n.Y[0]});
  for (int k = 1; k <= K - 2; ++k) {
    s += n.mi({n.X[k]}, {S}, before);
    std::vector<GaussVar> others = before;
    for (int i = k + 1; i < K; ++i) others.push_back(n.X[i]);
    others.push_back(S);
    s += n.mi({n.X[k]}, {n.Y[k]}, others);
    before.push_back(n.X[k]);
  }
  s += n.mi({n.X[K - 1]}, {n.Y[K - 1]}, before);
  BoundResult r = feasible_result("kub2b", K, s);
  r.perm = perm;
  r.params = {{"N2_sigma", sigma_N2}};
  return r;
}

BoundResult asym_kub2b_optimized(const Channel& ch, const std::vector<std::vector<int>>& perms) {
  const auto& list = perms.empty() ? default_labelings(ch.K) : perms;
  BoundResult best = infeasible_result("kub2b", ch.K);
  for (const auto& perm : list) {
    const double lo = std::abs(permuted(ch, perm).h(0, ch.K - 1));
    if (lo > 1.0 + kConstraintTol) continue;
    const ScalarSearch s = minimize_scalar(
        [&](double x) { return asym_thm_kub2b(ch, x, perm).sum_rate; }, std::min(lo, 1.0), 1.0, 41);
    if (!std::isfinite(s.value)) continue;
    BoundResult r = asym_thm_kub2b(ch, s.x, perm);
    if (better(r, best)) best = r;
  }
  return best;
}

BoundResult asym_thm_kub3b(const Channel& ch, const std::vector<NoiseParam>& W,
                           const std::vector<double>& sigma_N, const std::vector<int>& perm) {
  check_k(ch.K);
  const int K = ch.K;
  if (W.size() != static_cast<std::size_t>(K) || sigma_N.size() != static_cast<std::size_t>(K))
    throw ConfigError("kub3b needs one W and one sigma_N per user");
  const Channel c = permuted(ch, perm);
  BoundResult bad = infeasible_result("kub3b", K);
  bad.perm = perm;

  std::vector<double> tv(K, 0.0);
  std::vector<bool> silent(K, false);
  for (int s = 0; s < K; ++s) {
    const int first = s, second = (s + 1) % K, last = (s + K - 1) % K;
    const double sn2 = sigma_N[second] * sigma_N[second];
    const cd h = c.h(first, last);
    const double vzw = var_z_minus(W[last]);
    if (var_n_given(W[first]) < sn2 - kConstraintTol) return bad;
    if (sn2 < std::norm(h) * vzw - kConstraintTol) return bad;
    silent[s] = std::norm(h) < kSingularEps;
    if (!silent[s]) tv[s] = std::max(0.0, sn2 / std::norm(h) - vzw);
  }

  Net n(c);
  std::vector<GaussVar> Wv(K), Nv(K);
  for (int k = 0; k < K; ++k) {
    Wv[k] = n.sys.correlated_pair(W[k].sigma, W[k].rho, n.Z[k]);
    Nv[k] = n.sys.latent(sigma_N[k]);
  }
  double total = 0.0;
  for (int s = 0; s < K; ++s) {
    std::vector<int> o(K);
    for (int i = 0; i < K; ++i) o[i] = (s + i) % K;
    GaussVar S = Nv[o[1]];
    for (int i = 0; i < K; ++i)
      if (i != o[0]) S += c.h(o[0], i) * n.X[i];
    const int last = o[K - 1];
    const GaussVar U = n.interference(last) + Wv[last];
    double v = n.mi({n.X[o[0]]}, {n.Y[o[0]]}) + n.mi({n.X[last]}, {n.Y[last]}, {U});
    GaussVar resid = n.X[last] + n.Z[last] - Wv[last];
    if (!silent[s]) {
      v += n.mi({U}, {resid + n.sys.latent(std::sqrt(tv[s]))});
    }
    std::vector<GaussVar> before = {n.X[o[0]]};
    for (int l = 1; l <= K - 2; ++l) {
      v += n.mi({n.X[o[l]]}, {S}, before);
      std::vector<GaussVar> others = before;
      for (int i = l + 1; i < K; ++i) others.push_back(n.X[o[i]]);
      others.push_back(S);
      v += n.mi({n.X[o[l]]}, {n.Y[o[l]]}, others);
      before.push_back(n.X[o[l]]);
    }
    total += v;
  }
  BoundResult r = feasible_result("kub3b", K, total / K);
  r.perm = perm;
  push_noise(r, "W", W[0]);
  r.params.emplace_back("N_sigma", sigma_N[0]);
  return r;
}

BoundResult asym_kub3b_optimized(const Channel& ch, const OptProfile& prof,
                                 const std::vector<std::vector<int>>& perms) {
  const int K = ch.K;
  std::vector<std::vector<int>> list = perms;
  if (list.empty()) {
    // Cyclic shifts of a labeling give the same average; keep one per class.
    for (auto& p : default_labelings(K))
      if (p[0] == 0) list.push_back(p);
  }
  BoundResult best = infeasible_result("kub3b", K);
  for (const auto& perm : list) {
    auto eval = [&](const std::vector<NoiseParam>& p) {
      return asym_thm_kub3b(ch, std::vector<NoiseParam>(K, p[0]), std::vector<double>(K, p[1].sigma), perm);
    };
    const NoiseSearch s = minimize_noise([&](const std::vector<NoiseParam>& p) { return eval(p).sum_rate; }, 2,
                                         ch.field, prof, {}, {false, true});
    if (!std::isfinite(s.value)) continue;
    BoundResult r = eval(s.params);
    if (better(r, best)) best = r;
  }
  return best;
}

BoundResult chain_bound(const Channel& ch, const std::vector<NoiseParam>& N, const std::vector<int>& perm) {
  check_k(ch.K);
  const int K = ch.K;
  if (N.size() != static_cast<std::size_t>(K)) throw ConfigError("chain bound needs one N per user");
  const Channel c = permuted(ch, perm);
  BoundResult bad = infeasible_result("chain", K);
  bad.perm = perm;
  if (!cyclic_condition_holds(c)) return bad;
  for (int k = 1; k <= K - 2; ++k) {
    const cd den = c.h(k - 1, k + 1);
    if (std::abs(den) < kSingularEps) return bad;
    const cd r = c.h(k, k + 1) / den;
    const double vV = var_n_given(N[k], r);
    if (k < K - 2) {
      const double nxt = N[k + 1].sigma * N[k + 1].sigma;
      if (std::norm(r) * vV < nxt - kConstraintTol) return bad;
    } else if (vV < std::norm(c.h(K - 3, K - 1)) - kConstraintTol) {
      return bad;
    }
  }
  Net n(c);
  double s = n.mi({n.X[0]}, {n.Y[0]});
  std::vector<GaussVar> before = {n.X[0]};
  for (int k = 1; k <= K - 2; ++k) {
    GaussVar S = n.sys.correlated_pair(N[k].sigma, N[k].rho, n.Z[k]);
    for (int i = 0; i < K; ++i)
      if (i != k - 1) S += c.h(k - 1, i) * n.X[i];
    s += n.mi({n.X[k]}, {n.Y[k], S}, before);
    before.push_back(n.X[k]);
  }
  s += n.mi({n.X[K - 1]}, {n.Y[K - 1]}, before);
  BoundResult r = feasible_result("chain", K, s);
  r.perm = perm;
  push_noise(r, "N", N[1]);
  return r;
}

BoundResult chain_optimized(const Channel& ch, const OptProfile& prof) {
  const CyclicCheck cc = cyclic_reduction_check(ch);
  if (!cc.holds) return infeasible_result("chain", ch.K);
  // Only users 2..K-1 carry a genie; each gets its own N.
  auto eval = [&](const std::vector<NoiseParam>& p) {
    std::vector<NoiseParam> N(ch.K, p[0]);
    for (std::size_t i = 0; i < p.size(); ++i) N[i + 1] = p[i];
    return chain_bound(ch, N, cc.witness);
  };
  // Seed: rho_k = conj(r_k) sigma_k keeps the conditional variance at sigma_k^2; sigma is
  // built backward from the last constraint and scaled into the interior.
  const Channel c = permuted(ch, cc.witness);
  const int K = ch.K;
  std::vector<std::vector<NoiseParam>> seeds;
  std::vector<double> sig(K, 0.0);
  std::vector<cd> r(K);
  bool ok = true;
  for (int k = 1; k <= K - 2 && ok; ++k) {
    ok = std::abs(c.h(k - 1, k + 1)) >= kSingularEps;
    if (ok) r[k] = c.h(k, k + 1) / c.h(k - 1, k + 1);
  }
  if (ok) {
    sig[K - 2] = std::abs(c.h(K - 3, K - 1));
    for (int k = K - 3; k >= 1; --k) sig[k] = std::abs(r[k]) < kSingularEps ? INFINITY : sig[k + 1] / std::abs(r[k]);
    double room = INFINITY;
    for (int k = 1; k <= K - 2; ++k) room = std::min(room, 1.0 / (sig[k] * std::max(1.0, std::abs(r[k]))));
    if (std::isfinite(room) && room >= 1.0) {
      const double t = std::sqrt(room);
      std::vector<NoiseParam> seed;
      for (int k = 1; k <= K - 2; ++k) seed.push_back({t * sig[k], std::conj(r[k]) * t * sig[k]});
      seeds.push_back(seed);
    }
  }
  const NoiseSearch s = minimize_noise([&](const std::vector<NoiseParam>& p) { return eval(p).sum_rate; },
                                       ch.K - 2, ch.field, prof, seeds);
  if (!std::isfinite(s.value)) return infeasible_result("chain", ch.K);
  return eval(s.params);
}

BoundResult best_upper_k(const Channel& ch, const OptProfile& prof, int max_search_k) {
  const int K = ch.K;
  if (K == 3) return best_upper_three(ch, prof);
  check_k(K);
  std::vector<BoundResult> parts;
  if (is_symmetric(ch)) {
    const cd g = ch.h(0, 1);
    const double P = ch.P[0];
    parts.push_back(kramer_two_user(P, g, K));
    parts.push_back(etw_two_user(P, g, K));
    parts.push_back(closed_form_best(K, g, P));
    if (K <= max_search_k) {
      parts.push_back(thm5_optimized(K, g, P, ch.field, prof));
      parts.push_back(thm6_optimized(K, g, P, ch.field, prof));
    }
    if (K <= 5) parts.push_back(asym_kub2b_optimized(ch));
  } else {
    parts.push_back(asym_kub2b_optimized(ch));
    parts.push_back(asym_kub3b_optimized(ch, OptProfile::light()));
    parts.push_back(chain_optimized(ch, OptProfile::light()));
  }
  BoundResult best = infeasible_result("best_upper", K);
  for (const BoundResult& r : parts)
    if (better(r, best)) best = r;
  best.source = best.name == "closed_best" ? best.source : best.name;
  best.name = "best_upper";
  return best;
}

}  // namespace gicb
