#pragma once

#include <string>
#include <vector>

#include "gicbound/gaussian.hpp"

namespace gicb {

// Thrown for malformed scenario descriptions.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// K-user channel Y_k = sum_i h_ki X_i + Z_k in standard form (h_kk = 1).
struct Channel {
  int K = 0;
  Field field = Field::complex;
  std::vector<cd> H;       // row-major K x K
  std::vector<double> P;   // per-user power, linear

  cd h(int k, int i) const { return H[static_cast<std::size_t>(k) * K + i]; }
  cd& h(int k, int i) { return H[static_cast<std::size_t>(k) * K + i]; }
};

// Validates and returns a channel; throws ConfigError/DomainError.
Channel make_channel(int K, std::vector<cd> H, std::vector<double> P, Field field);

Channel make_symmetric(int K, cd g, double P, Field field = Field::complex);

// Circulant channel: row k carries g_list[i-1] at column (k + i) mod K.
Channel make_semi_symmetric(int K, const std::vector<cd>& g_list, double P,
                            Field field = Field::complex);

// |g|^2 = P^(alpha - 1); requires P > 1.
double alpha_to_gain(double alpha, double P);
double gain_to_alpha(double g2, double P);

// Relabels users: H'(i, j) = H(perm[i], perm[j]).
Channel permuted(const Channel& ch, const std::vector<int>& perm);

// True when all off-diagonal entries coincide and powers are equal.
bool is_symmetric(const Channel& ch, double tol = 1e-12);
// True when H is circulant and powers are equal.
bool is_circulant(const Channel& ch, double tol = 1e-12);

// Common off-diagonal gain of a symmetric channel.
cd symmetric_gain(const Channel& ch);

// Proportionality h(i-1, j) = h(i-1, i+1) / h(i, i+1) * h(i, j) for
// i = 2..K-2, j = i+2..K (one-based), checked under the identity labeling.
bool cyclic_condition_holds(const Channel& ch, double rel_tol = 1e-9);

struct CyclicCheck {
  bool holds = false;
  std::vector<int> witness;  // permutation, zero-based
};

// Searches all user relabelings for one satisfying the proportionality.
CyclicCheck cyclic_reduction_check(const Channel& ch, double rel_tol = 1e-9);

// All permutations of 0..K-1 in lexicographic order.
std::vector<std::vector<int>> all_permutations(int K);

// Parses the JSON scenario schema (explicit "h", "sym" or "semisym").
Channel channel_from_json(const std::string& text);

}  // namespace gicb
