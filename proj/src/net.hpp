#pragma once

#include <vector>

#include "gicbound/channel.hpp"
#include "gicbound/gaussian.hpp"

namespace gicb {

// Inputs, receiver noises and outputs of a channel as jointly Gaussian
// variables. Bounds are evaluated in complex form for both fields, so the
// underlying system is always complex.
struct Net {
  explicit Net(const Channel& ch);

  // sum_{i != k} h_ki X_i
  GaussVar interference(int k) const;

  double mi(const std::vector<GaussVar>& a, const std::vector<GaussVar>& b,
            const std::vector<GaussVar>& cond = {}) const {
    return mutual_info(a, b, cond, Field::complex);
  }

  const Channel& ch;
  System sys{Field::complex};
  std::vector<GaussVar> X, Z, Y;
};

}  // namespace gicb
