#pragma once

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "gicbound/gaussian.hpp"

namespace gicb {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();
// Slack allowed when checking the genie-noise constraints.
inline constexpr double kConstraintTol = 1e-12;

// Genie noise: standard deviation and correlation with the same-index
// receiver noise, E[Z N*] = conj(rho) sigma.
struct NoiseParam {
  double sigma = 1.0;
  cd rho = 0.0;
};

// Var(Z - c N) for unit-variance Z.
double var_z_minus(const NoiseParam& n, cd c = 1.0);
// Var(N | Z - c N); equals sigma^2 when Z - c N is degenerate.
double var_n_given(const NoiseParam& n, cd c = 1.0);
// Var(Z | N - c Z); equals 1 when N - c Z is degenerate.
double var_z_given(const NoiseParam& n, cd c);

struct BoundResult {
  std::string name;
  int K = 0;
  double sum_rate = kInfinity;   // bits per complex channel use, all users
  double normalized = kInfinity; // sum_rate / (2K)
  bool feasible = false;
  std::vector<std::pair<std::string, double>> params;
  std::vector<int> perm;
  std::string source;  // winning component for combined bounds
};

BoundResult feasible_result(std::string name, int K, double sum_rate);
BoundResult infeasible_result(std::string name, int K);

// Smaller feasible value wins; ties go to the lexicographically smaller name.
bool better(const BoundResult& a, const BoundResult& b);

}  // namespace gicb
