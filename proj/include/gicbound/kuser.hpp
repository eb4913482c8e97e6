#pragma once

#include <vector>

#include "gicbound/bound.hpp"
#include "gicbound/channel.hpp"
#include "gicbound/optimize.hpp"

namespace gicb {

// Genie noises of the K-user symmetric bounds. N holds N_2..N_{K-1}; a
// single entry (or tied = true) applies to every index.
struct KGenieConfig {
  std::vector<NoiseParam> N{NoiseParam{}};
  NoiseParam W1{};
  NoiseParam WK{};
  bool tied = true;

  // One-based index k in 2..K-1.
  const NoiseParam& n(int k) const { return (tied || N.size() == 1) ? N.front() : N.at(k - 2); }
};

BoundResult thm5_bound(int K, cd g, double P, const KGenieConfig& cfg);
BoundResult thm6_bound(int K, cd g, double P, const KGenieConfig& cfg);

// Tied-parameter searches, seeded with the closed-form substitutions.
BoundResult thm5_optimized(int K, cd g, double P, Field field,
                           const OptProfile& prof = OptProfile::standard());
BoundResult thm6_optimized(int K, cd g, double P, Field field,
                           const OptProfile& prof = OptProfile::standard());

// Parameter choices that turn the evaluators into the closed forms.
KGenieConfig prop1_params(cd g);
KGenieConfig prop2_params(cd g);
KGenieConfig prop3_params(cd g, double gamma);

BoundResult prop1_closed(int K, cd g, double P);
BoundResult prop2_closed(int K, cd g, double P);
BoundResult prop3_closed(int K, cd g, double P, double gamma);
bool prop3_gamma_feasible(cd g, double gamma);
// gamma_i = 200^(i/64), i = 1..64; minimum over the feasible ones.
std::vector<double> prop3_gamma_grid();
BoundResult prop3_search(int K, cd g, double P);

// Minimum of prop1 (|g| < 1), prop2, prop3 (|g| > 1, searched) and Kramer.
BoundResult closed_form_best(int K, cd g, double P);

struct LargeKResult {
  double d_K = 1.0;
  double ell_star = 0.0;  // bits; +inf at g = 1
  double eta = 0.0;
  bool finite = true;
};

LargeKResult power_offset(cd g);
// SNR in dB against thresholds 3.0103 * ell_star and twice that.
LargeKResult eta_regime(double P, cd g);
// Per-user affine high-SNR form log2(P) - ell_star.
double affine_approx(int K, double P, cd g);

// Asymmetric bounds. Labelings default to all K! for K <= 5, identity beyond.
BoundResult asym_thm_kub2b(const Channel& ch, double sigma_N2, const std::vector<int>& perm);
BoundResult asym_kub2b_optimized(const Channel& ch, const std::vector<std::vector<int>>& perms = {});

// W[k] and sigma_N[k] are indexed by user.
BoundResult asym_thm_kub3b(const Channel& ch, const std::vector<NoiseParam>& W,
                           const std::vector<double>& sigma_N, const std::vector<int>& perm);
BoundResult asym_kub3b_optimized(const Channel& ch, const OptProfile& prof = OptProfile::light(),
                                 const std::vector<std::vector<int>>& perms = {});

// Penalty-free chain form for channels meeting the proportionality
// condition; N[k] is the genie noise of user k (users 1..K-2, zero-based).
BoundResult chain_bound(const Channel& ch, const std::vector<NoiseParam>& N, const std::vector<int>& perm);
BoundResult chain_optimized(const Channel& ch, const OptProfile& prof = OptProfile::light());

std::vector<std::vector<int>> default_labelings(int K);

// Best upper bound available for any K: the three-user minimum for K = 3,
// the symmetric K-user set for symmetric channels, the asymmetric set
// otherwise. Parameter searches are skipped above max_search_k.
BoundResult best_upper_k(const Channel& ch, const OptProfile& prof = OptProfile::standard(),
                         int max_search_k = 1000);

}  // namespace gicb
