#pragma once

#include "gicbound/bound.hpp"
#include "gicbound/channel.hpp"

namespace gicb {

// Per-user rates (bits per complex channel use) of the two-user bounds.
double kramer_per_user(double P, cd g);
double etw_per_user(double P, cd g);

// K-user symmetric-rate bounds from the two-user results: sum_rate = K * r.
BoundResult kramer_two_user(double P, cd g, int K = 2);
BoundResult etw_two_user(double P, cd g, int K = 2);

// Objective of the three-user generalized Kramer bound at correlation rho;
// +inf outside the admissible region.
double gen_kramer_objective(double P, cd g, cd rho);
// Admissibility form [g* g*] [[1, rho], [rho*, 1]]^-1 [g; g].
double gen_kramer_form(cd g, cd rho);

// Requires a symmetric three-user channel.
BoundResult gen_kramer_three(const Channel& ch);

// Z-channel extension bound for one user labeling; infeasible when the
// labeling violates the cross-gain conditions.
BoundResult z_extension_three(const Channel& ch, const std::vector<int>& perm);
// Minimum over all six labelings.
BoundResult z_extension_three(const Channel& ch);

struct LowerBounds {
  double tin = 0.0;  // per-user rates, bits per complex channel use
  double tdm = 0.0;
  double snd = 0.0;
  double best = 0.0;
};

LowerBounds lower_bounds(int K, cd g, double P);

}  // namespace gicb
