#include "gicbound/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace gicb {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

using Vec = std::vector<cd>;

cd dot(const Vec& a, const Vec& b) {
  cd s = 0.0;
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) s += a[i] * std::conj(b[i]);
  return s;
}

double norm2(const Vec& a) {
  double s = 0.0;
  for (const cd& x : a) s += std::norm(x);
  return s;
}

// Orthonormal basis grown by modified Gram-Schmidt with one
// reorthogonalization pass.
class Basis {
 public:
  explicit Basis(std::size_t dim) : dim_(dim) {}

  // Removes the span component from v in place; returns the residual norm^2.
  double project_out(Vec& v) const {
    v.resize(dim_, cd{0.0, 0.0});
    for (int pass = 0; pass < 2; ++pass) {
      for (const Vec& q : q_) {
        const cd c = dot(v, q);
        for (std::size_t i = 0; i < dim_; ++i) v[i] -= c * q[i];
      }
    }
    return norm2(v);
  }

  // Adds v (after projection) if it is not numerically dependent. Returns the
  // residual norm^2 relative to the original norm^2 test.
  double add(Vec v) {
    const double orig = norm2(v);
    const double r = project_out(v);
    if (orig <= 0.0 || r <= kSingularEps * orig) return 0.0;
    const double s = 1.0 / std::sqrt(r);
    for (cd& x : v) x *= s;
    q_.push_back(std::move(v));
    return r;
  }

  std::size_t rank() const { return q_.size(); }
  const std::vector<Vec>& vectors() const { return q_; }

 private:
  std::size_t dim_;
  std::vector<Vec> q_;
};

std::size_t max_dim(std::initializer_list<const std::vector<GaussVar>*> lists) {
  std::size_t d = 0;
  for (const auto* l : lists)
    for (const GaussVar& v : *l) d = std::max(d, v.coeffs().size());
  return d;
}

void check_field(const std::vector<GaussVar>& vars, Field field) {
  if (field != Field::real) return;
  for (const GaussVar& v : vars)
    for (const cd& c : v.coeffs())
      if (c.imag() != 0.0)
        throw DomainError("complex coefficient in a real-field system");
}

}  // namespace

double GaussVar::variance() const { return norm2(c_); }

GaussVar GaussVar::operator+(const GaussVar& o) const {
  GaussVar r = *this;
  r += o;
  return r;
}

GaussVar& GaussVar::operator+=(const GaussVar& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), cd{0.0, 0.0});
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

GaussVar GaussVar::operator-() const {
  GaussVar r = *this;
  for (cd& x : r.c_) x = -x;
  return r;
}

GaussVar GaussVar::operator-(const GaussVar& o) const { return *this + (-o); }

GaussVar operator*(cd a, const GaussVar& v) {
  GaussVar r = v;
  for (cd& x : r.c_) x *= a;
  return r;
}

cd covariance(const GaussVar& a, const GaussVar& b) { return dot(a.coeffs(), b.coeffs()); }

GaussVar System::latent(double stddev) {
  Vec c(n_ + 1, cd{0.0, 0.0});
  c[n_] = stddev;
  ++n_;
  return GaussVar(std::move(c));
}

GaussVar System::correlated_pair(double sigma, cd rho, const GaussVar& z) {
  if (!(sigma >= 0.0 && sigma <= 1.0)) throw DomainError("sigma must lie in [0, 1]");
  if (!(std::abs(rho) <= 1.0 + 1e-12)) throw DomainError("|rho| must not exceed 1");
  if (field_ == Field::real && rho.imag() != 0.0)
    throw DomainError("complex correlation in a real-field system");
  const double m2 = std::min(1.0, std::norm(rho));
  GaussVar e = latent(sigma * std::sqrt(1.0 - m2));
  return (rho * sigma) * z + e;
}

double entropy(const std::vector<GaussVar>& vars, Field field) {
  if (vars.empty()) throw DomainError("entropy of an empty list");
  check_field(vars, field);
  Basis b(max_dim({&vars}));
  double logdet = 0.0;
  double det = 1.0;
  for (const GaussVar& v : vars) {
    Vec c = v.coeffs();
    const double r = b.project_out(c);
    det *= r;
    if (r <= 0.0 || det < kSingularEps) return -kInf;
    logdet += std::log2(r);
    const double s = 1.0 / std::sqrt(r);
    for (cd& x : c) x *= s;
    b.add(std::move(c));
  }
  const double m = static_cast<double>(vars.size());
  if (field == Field::complex) return m * std::log2(std::numbers::pi * std::numbers::e) + logdet;
  return 0.5 * (m * std::log2(2.0 * std::numbers::pi * std::numbers::e) + logdet);
}

double mutual_info(const std::vector<GaussVar>& a, const std::vector<GaussVar>& b,
                   const std::vector<GaussVar>& cond, Field field) {
  check_field(a, field);
  check_field(b, field);
  check_field(cond, field);
  const std::size_t dim = max_dim({&a, &b, &cond});
  if (dim == 0) return 0.0;

  Basis c(dim);
  for (const GaussVar& v : cond) c.add(v.coeffs());

  auto residual_basis = [&](const std::vector<GaussVar>& vars) {
    Basis r(dim);
    for (const GaussVar& v : vars) {
      Vec x = v.coeffs();
      const double orig = norm2(x);
      const double res = c.project_out(x);
      if (orig <= 0.0 || res <= kSingularEps * orig) continue;
      r.add(std::move(x));
    }
    return r;
  };
  const Basis ra = residual_basis(a);
  const Basis rb = residual_basis(b);
  if (ra.rank() == 0 || rb.rank() == 0) return 0.0;

  // With orthonormal bases on both sides, det Sigma_AB equals the product of
  // the residual norms of B's basis projected against A's span.
  Basis joint = ra;
  double det = 1.0;
  double logdet = 0.0;
  for (const Vec& q : rb.vectors()) {
    Vec x = q;
    const double r = joint.project_out(x);
    det *= r;
    if (r <= 0.0 || det < kSingularEps) return kInf;
    logdet += std::log2(r);
    const double s = 1.0 / std::sqrt(r);
    for (cd& y : x) y *= s;
    joint.add(std::move(x));
  }
  const double mi = -logdet;
  return field == Field::complex ? mi : 0.5 * mi;
}

double conditional_variance(const GaussVar& x, const std::vector<GaussVar>& given) {
  std::size_t dim = x.coeffs().size();
  for (const GaussVar& g : given) dim = std::max(dim, g.coeffs().size());
  Basis b(dim);
  for (const GaussVar& g : given) b.add(g.coeffs());
  Vec v = x.coeffs();
  return b.project_out(v);
}

}  // namespace gicb
