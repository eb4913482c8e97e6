#include "gicbound/bound.hpp"

#include <cmath>

namespace gicb {

double var_z_minus(const NoiseParam& n, cd c) {
  // E|Z - cN|^2 = 1 - 2 Re(conj(c) E[Z N*]) + |c|^2 sigma^2
  const double v = 1.0 - 2.0 * n.sigma * (c * n.rho).real() + std::norm(c) * n.sigma * n.sigma;
  return std::max(0.0, v);
}

double var_n_given(const NoiseParam& n, cd c) {
  const double s2 = n.sigma * n.sigma;
  const double d = var_z_minus(n, c);
  if (d < kSingularEps) return s2;
  // E[N (Z - cN)*] = rho sigma - conj(c) sigma^2
  const cd cov = n.rho * n.sigma - std::conj(c) * s2;
  return std::max(0.0, s2 - std::norm(cov) / d);
}

double var_z_given(const NoiseParam& n, cd c) {
  // E|N - cZ|^2 = sigma^2 - 2 sigma Re(conj(c) rho) + |c|^2
  const double d = std::max(0.0, n.sigma * n.sigma - 2.0 * n.sigma * (std::conj(c) * n.rho).real() +
                                     std::norm(c));
  if (d < kSingularEps) return 1.0;
  // E[Z (N - cZ)*] = conj(rho) sigma - conj(c)
  const cd cov = std::conj(n.rho) * n.sigma - std::conj(c);
  return std::max(0.0, 1.0 - std::norm(cov) / d);
}

BoundResult feasible_result(std::string name, int K, double sum_rate) {
  BoundResult r;
  r.name = std::move(name);
  r.K = K;
  r.sum_rate = sum_rate;
  r.normalized = sum_rate / (2.0 * K);
  r.feasible = std::isfinite(sum_rate);
  return r;
}

BoundResult infeasible_result(std::string name, int K) {
  BoundResult r;
  r.name = std::move(name);
  r.K = K;
  return r;
}

bool better(const BoundResult& a, const BoundResult& b) {
  if (a.feasible != b.feasible) return a.feasible;
  if (a.sum_rate != b.sum_rate) return a.sum_rate < b.sum_rate;
  return a.name < b.name;
}

}  // namespace gicb
