#pragma once

#include <array>
#include <vector>

#include "gicbound/bound.hpp"
#include "gicbound/channel.hpp"
#include "gicbound/optimize.hpp"

namespace gicb {

using Noise3 = std::array<NoiseParam, 3>;

struct GenieConfig3 {
  Noise3 W;  // change-of-interference noises
  Noise3 N;  // Etkin-type genie noises
};

enum class Thm2Branch { first, second };
enum class Thm3Branch { I0, I1 };

// Evaluators at fixed genie parameters under the labeling `perm`
// (H'(i, j) = H(perm[i], perm[j])). Infeasible points return an infeasible
// result rather than throwing.
BoundResult thm1_bound(const Channel& ch, const Noise3& W, const std::vector<int>& perm = {0, 1, 2});
BoundResult thm2_bound(const Channel& ch, const NoiseParam& N2, Thm2Branch branch,
                       const std::vector<int>& perm = {0, 1, 2});
// Same quantity as thm2_bound, always through the mutual-information kernel.
double thm2_mutual_info(const Channel& ch, const NoiseParam& N2, const std::vector<int>& perm = {0, 1, 2});
BoundResult thm3_bound(const Channel& ch, const GenieConfig3& cfg, Thm3Branch branch,
                       const std::vector<int>& perm = {0, 1, 2});

// Symmetric three-user simplification.
double thm4_R(double P, cd g, const NoiseParam& N, const NoiseParam& W);
// Parameter substitutions behind R0 (sigma_N free) and R1 (rho_N free).
// Return false when the substitution leaves the admissible domain.
bool thm4_r0_params(cd g, double sigma_N, NoiseParam& N, NoiseParam& W);
bool thm4_r1_params(cd g, cd rho_N, NoiseParam& N, NoiseParam& W);

struct Thm4Result {
  BoundResult best;
  BoundResult r0;
  BoundResult r1;
};
Thm4Result thm4_symmetric(double P, cd g, Field field);

// Parameter searches (minimum over labelings).
BoundResult thm1_optimized(const Channel& ch, const OptProfile& prof = OptProfile::standard());
BoundResult thm2_optimized(const Channel& ch, const OptProfile& prof = OptProfile::standard());
BoundResult thm3_optimized(const Channel& ch, Thm3Branch branch,
                           const OptProfile& prof = OptProfile::standard());
BoundResult thm3_optimized(const Channel& ch, const OptProfile& prof = OptProfile::standard());

// Minimum of Theorems 1-3 only.
BoundResult new_upper_three(const Channel& ch, const OptProfile& prof = OptProfile::standard());
// Minimum of Theorems 1-3, the Z-channel extension and, for symmetric
// channels, the Kramer, ETW and generalized Kramer bounds.
BoundResult best_upper_three(const Channel& ch, const OptProfile& prof = OptProfile::standard());

// Labelings that can give distinct values for this channel.
std::vector<std::vector<int>> distinct_labelings3(const Channel& ch);

}  // namespace gicb
