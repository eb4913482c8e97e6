#pragma once

#include <complex>

#include "gicbound/bound.hpp"

namespace gicb {

// Extended precision for objectives whose optimum sits where two small
// quantities cancel (|rho| -> 1).
using wide = __float128;

struct wcd {
  wide re;
  wide im;
};

inline wcd widen(cd z) { return {static_cast<wide>(z.real()), static_cast<wide>(z.imag())}; }
inline wcd operator+(wcd a, wcd b) { return {a.re + b.re, a.im + b.im}; }
inline wcd operator*(wcd a, wcd b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
inline wcd conj(wcd a) { return {a.re, -a.im}; }
inline wide norm(wcd a) { return a.re * a.re + a.im * a.im; }

// Var(Z - N) for unit-variance Z.
inline wide var_z_minus_wide(const NoiseParam& n) {
  const wide s = n.sigma;
  return 1 - 2 * s * static_cast<wide>(n.rho.real()) + s * s;
}

}  // namespace gicb
