#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace gicb {

using cd = std::complex<double>;

enum class Field { real, complex };

// Thrown for out-of-domain parameters (|rho| > 1, sigma outside [0,1], ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Determinants (and Gram residuals) below this are treated as exactly zero.
inline constexpr double kSingularEps = 1e-12;

// Zero-mean Gaussian scalar written as a linear combination of independent
// unit-variance latents. Coefficient vectors of different length are padded
// with zeros, so variables created before and after a new latent mix freely.
class GaussVar {
 public:
  GaussVar() = default;
  explicit GaussVar(std::vector<cd> coeffs) : c_(std::move(coeffs)) {}

  const std::vector<cd>& coeffs() const { return c_; }
  double variance() const;

  GaussVar operator+(const GaussVar& o) const;
  GaussVar operator-(const GaussVar& o) const;
  GaussVar operator-() const;
  GaussVar& operator+=(const GaussVar& o);
  friend GaussVar operator*(cd a, const GaussVar& v);
  friend GaussVar operator*(const GaussVar& v, cd a) { return a * v; }

 private:
  std::vector<cd> c_;
};

// E[a b*].
cd covariance(const GaussVar& a, const GaussVar& b);

// Allocator of independent latents for one jointly Gaussian system.
class System {
 public:
  explicit System(Field f) : field_(f) {}

  Field field() const { return field_; }
  std::size_t latent_count() const { return n_; }

  // Fresh latent scaled to the given standard deviation.
  GaussVar latent(double stddev = 1.0);

  // W with Var(W) = sigma^2 and E[z W*] = conj(rho) sigma, built from z and
  // one fresh latent. z must have unit variance.
  GaussVar correlated_pair(double sigma, cd rho, const GaussVar& z);

 private:
  Field field_;
  std::size_t n_ = 0;
};

// Differential entropy in bits. Returns -infinity when det < kSingularEps.
double entropy(const std::vector<GaussVar>& vars, Field field);

// I(a; b | cond) in bits. Dependent members of any list are reduced to a
// basis of their span first, so singular conditioning sets are handled
// exactly. Returns +infinity when a and b share a noiseless component.
double mutual_info(const std::vector<GaussVar>& a, const std::vector<GaussVar>& b,
                   const std::vector<GaussVar>& cond, Field field);

// Var(x | given).
double conditional_variance(const GaussVar& x, const std::vector<GaussVar>& given);

}  // namespace gicb
