#include "net.hpp"

#include <cmath>

namespace gicb {

Net::Net(const Channel& c) : ch(c) {
  for (int k = 0; k < ch.K; ++k) X.push_back(sys.latent(std::sqrt(ch.P[k])));
  for (int k = 0; k < ch.K; ++k) Z.push_back(sys.latent());
  for (int k = 0; k < ch.K; ++k) Y.push_back(X[k] + interference(k) + Z[k]);
}

GaussVar Net::interference(int k) const {
  GaussVar s;
  for (int i = 0; i < ch.K; ++i)
    if (i != k) s += ch.h(k, i) * X[i];
  return s;
}

}  // namespace gicb
