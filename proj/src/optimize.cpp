#include "gicbound/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace gicb {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double linspace_at(double lo, double hi, int n, int i) {
  return n <= 1 ? lo : lo + (hi - lo) * i / (n - 1);
}

class Descent {
 public:
  Descent(const NoiseObjective& f, Field field, const OptProfile& prof)
      : f_(f), field_(field), prof_(prof) {}

  double eval(const std::vector<NoiseParam>& p) const {
    const double v = f_(p);
    return std::isnan(v) ? kInfinity : v;
  }

  void consider(std::vector<NoiseParam>& cur, std::size_t b, double sigma, cd rho) {
    if (sigma < 0.0 || sigma > 1.0 || std::abs(rho) > 1.0) return;
    NoiseParam keep = cur[b];
    cur[b] = NoiseParam{sigma, rho};
    const double v = eval(cur);
    note_basin(cur, v);
    if (v < best_) {
      best_ = v;
      best_params_ = cur;
    }
    cur[b] = keep;
  }

  void grid_block(std::size_t b, bool sigma_only) {
    std::vector<NoiseParam> cur = best_params_;
    if (sigma_only) {
      for (int i = 0; i < prof_.sigma_pts; ++i) consider(cur, b, linspace_at(0, 1, prof_.sigma_pts, i), 0.0);
      return;
    }
    if (field_ == Field::real) {
      const int ns = prof_.sigma_pts;
      const int nr = 2 * prof_.rho_pts - 1;
      for (int i = 0; i < ns; ++i)
        for (int j = 0; j < nr; ++j)
          consider(cur, b, linspace_at(0, 1, ns, i), linspace_at(-1, 1, nr, j));
      return;
    }
    const int cs = std::max(6, (prof_.sigma_pts - 1) / 4 + 1);
    const int cr = std::max(6, (prof_.rho_pts - 1) / 4 + 1);
    const int cp = std::max(4, prof_.phase_pts / 4);
    for (int i = 0; i < cs; ++i)
      for (int j = 0; j < cr; ++j)
        for (int k = 0; k < cp; ++k)
          consider(cur, b, linspace_at(0, 1, cs, i),
                   std::polar(linspace_at(0, 1, cr, j), kTwoPi * k / cp));
    cur = best_params_;
    const double ph = std::arg(cur[b].rho);
    for (int i = 0; i < prof_.sigma_pts; ++i)
      for (int j = 0; j < prof_.rho_pts; ++j)
        consider(cur, b, linspace_at(0, 1, prof_.sigma_pts, i),
                 std::polar(linspace_at(0, 1, prof_.rho_pts, j), ph));
    cur = best_params_;
    const double mag = std::abs(cur[b].rho);
    for (int k = 0; k < prof_.phase_pts; ++k)
      consider(cur, b, cur[b].sigma, std::polar(mag, kTwoPi * k / prof_.phase_pts));
  }

  void refine_block(std::size_t b, bool sigma_only) {
    std::vector<NoiseParam> cur = best_params_;
    const int n = prof_.refine_pts;
    const double ds = 2.0 / (prof_.sigma_pts - 1);
    const double dr = 2.0 / (prof_.rho_pts - 1);
    const NoiseParam c = cur[b];
    if (sigma_only) {
      for (int i = 0; i < n; ++i)
        consider(cur, b, std::clamp(c.sigma + linspace_at(-ds, ds, n, i), 0.0, 1.0), 0.0);
      return;
    }
    if (field_ == Field::real) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          consider(cur, b, std::clamp(c.sigma + linspace_at(-ds, ds, n, i), 0.0, 1.0),
                   std::clamp(c.rho.real() + linspace_at(-dr, dr, n, j), -1.0, 1.0));
      return;
    }
    const double mag = std::abs(c.rho);
    const double ph = std::arg(c.rho);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        consider(cur, b, std::clamp(c.sigma + linspace_at(-ds, ds, n, i), 0.0, 1.0),
                 std::polar(std::clamp(mag + linspace_at(-dr, dr, n, j), 0.0, 1.0), ph));
    cur = best_params_;
    const double dp = 2.0 * kTwoPi / prof_.phase_pts;
    for (int k = 0; k < n; ++k)
      consider(cur, b, cur[b].sigma, std::polar(std::abs(cur[b].rho), ph + linspace_at(-dp, dp, n, k)));
  }

  // Compass search with halving steps from one start; reaches minima that
  // sit on a feasibility boundary between grid points.
  void polish(std::vector<NoiseParam> at, double value, std::size_t blocks,
              const std::function<bool(std::size_t)>& only) {
    const int per_block = field_ == Field::real ? 2 : 3;
    std::mt19937_64 rng(0x5eed);
    std::normal_distribution<double> nd;
    auto project = [&](NoiseParam& c, std::size_t b) {
      c.sigma = std::clamp(c.sigma, 0.0, 1.0);
      if (only(b)) c.rho = 0.0;
      if (field_ == Field::real) c.rho = std::clamp(c.rho.real(), -1.0, 1.0);
      if (std::abs(c.rho) > 1.0) c.rho /= std::abs(c.rho);
    };
    auto attempt = [&](std::vector<NoiseParam>& cand) {
      for (std::size_t b = 0; b < blocks; ++b) project(cand[b], b);
      const double v = eval(cand);
      if (v >= value) return false;
      value = v;
      at = cand;
      return true;
    };
    double step = 2.0 / ((prof_.sigma_pts - 1) * std::max(1, prof_.refine_pts - 1));
    for (int it = 0; it < 300 && step > 1e-11; ++it) {
      bool moved = false;
      for (std::size_t b = 0; b < blocks; ++b)
        for (int k = 0; k < (only(b) ? 1 : per_block); ++k)
          for (double sgn : {-1.0, 1.0}) {
            std::vector<NoiseParam> cand = at;
            NoiseParam& c = cand[b];
            const double d = sgn * step;
            if (k == 0) c.sigma += d;
            else if (k == 1) c.rho += d;
            else c.rho += cd{0.0, d};
            moved |= attempt(cand);
          }
      // Random directions slide along curved constraint boundaries.
      for (int r = 0; r < 8 * per_block && !moved; ++r) {
        std::vector<NoiseParam> cand = at;
        std::vector<double> dir(blocks * 3);
        double n2 = 0.0;
        for (double& x : dir) n2 += (x = nd(rng)) * x;
        const double scale = step / std::sqrt(n2);
        for (std::size_t b = 0; b < blocks; ++b) {
          cand[b].sigma += scale * dir[3 * b];
          cand[b].rho += scale * cd{dir[3 * b + 1], field_ == Field::real ? 0.0 : dir[3 * b + 2]};
        }
        moved = attempt(cand);
      }
      step *= moved ? 2.0 : 0.5;
    }
    if (value < best_) {
      best_ = value;
      best_params_ = std::move(at);
    }
  }

  // Best points of distinct basins seen during the grid stage.
  void note_basin(const std::vector<NoiseParam>& p, double v) {
    if (!recording_ || !std::isfinite(v) || prof_.basins <= 0) return;
    auto dist = [&](const std::vector<NoiseParam>& q) {
      double d = 0.0;
      for (std::size_t b = 0; b < p.size(); ++b)
        d = std::max(d, std::abs(p[b].sigma - q[b].sigma) + std::abs(p[b].rho - q[b].rho));
      return d;
    };
    for (auto& [bv, bp] : basins_) {
      if (dist(bp) < 0.25) {
        if (v < bv) bv = v, bp = p;
        return;
      }
    }
    basins_.emplace_back(v, p);
    std::sort(basins_.begin(), basins_.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    if (basins_.size() > static_cast<std::size_t>(prof_.basins)) basins_.pop_back();
  }

  bool recording_ = false;
  std::vector<std::pair<double, std::vector<NoiseParam>>> basins_;
  double best_ = kInfinity;
  std::vector<NoiseParam> best_params_;

 private:
  const NoiseObjective& f_;
  Field field_;
  OptProfile prof_;
};

}  // namespace

NoiseSearch minimize_noise(const NoiseObjective& f, std::size_t blocks, Field field,
                           const OptProfile& profile,
                           const std::vector<std::vector<NoiseParam>>& seeds,
                           const std::vector<bool>& sigma_only) {
  Descent d(f, field, profile);
  auto only = [&](std::size_t b) { return b < sigma_only.size() && sigma_only[b]; };
  std::vector<std::vector<NoiseParam>> starts = seeds;
  starts.emplace_back(blocks, NoiseParam{1.0, 0.0});
  starts.emplace_back(blocks, NoiseParam{0.5, 0.0});
  for (double v : {0.25, 0.5, 0.75, 0.9}) starts.emplace_back(blocks, NoiseParam{v, v});
  d.best_params_ = starts.front();
  for (const auto& s : starts) {
    if (s.size() != blocks) continue;
    const double v = d.eval(s);
    if (v < d.best_ || d.best_params_.size() != blocks) {
      d.best_ = v;
      d.best_params_ = s;
    }
  }
  const int sweeps = blocks > 1 ? std::max(1, profile.sweeps) : 1;
  for (int s = 0; s < sweeps; ++s) {
    const double before = d.best_;
    d.recording_ = s == 0;
    for (std::size_t b = 0; b < blocks; ++b) d.grid_block(b, only(b));
    d.recording_ = false;
    if (s > 0 && d.best_ == before) break;
  }
  for (int pass = 0; pass < (blocks > 1 ? 2 : 1); ++pass)
    for (std::size_t b = 0; b < blocks; ++b) d.refine_block(b, only(b));
  if (std::isfinite(d.best_)) {
    const auto basins = d.basins_;
    d.polish(d.best_params_, d.best_, blocks, only);
    for (const auto& [v, p] : basins) d.polish(p, v, blocks, only);
  }
  return {d.best_, d.best_params_};
}

ScalarSearch golden_section(const std::function<double(double)>& f, double a, double b,
                            double tol, int max_iter) {
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int it = 0; it < max_iter && (b - a) > tol; ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  const double x = 0.5 * (a + b);
  const double fx = f(x);
  ScalarSearch r{x, fx};
  if (fc < r.value) r = {c, fc};
  if (fd < r.value) r = {d, fd};
  return r;
}

ScalarSearch minimize_scalar(const std::function<double(double)>& f, double lo, double hi,
                             int pts) {
  auto safe = [&](double x) {
    const double v = f(x);
    return std::isnan(v) ? kInfinity : v;
  };
  ScalarSearch best{lo, kInfinity};
  double step = (hi - lo) / (pts - 1);
  for (int i = 0; i < pts; ++i) {
    const double x = lo + step * i;
    const double v = safe(x);
    if (v < best.value) best = {x, v};
  }
  if (!std::isfinite(best.value)) return best;
  // 10x zoom around the incumbent.
  double a = std::max(lo, best.x - step);
  double b = std::min(hi, best.x + step);
  const double zstep = (b - a) / (pts - 1);
  for (int i = 0; i < pts; ++i) {
    const double x = a + zstep * i;
    const double v = safe(x);
    if (v < best.value) best = {x, v};
  }
  a = std::max(lo, best.x - zstep);
  b = std::min(hi, best.x + zstep);
  const ScalarSearch g = golden_section(safe, a, b);
  if (g.value < best.value) best = g;
  return best;
}

DiskSearch minimize_disk(const std::function<double(cd)>& f, int mag_pts, int phase_pts,
                         int zoom_levels) {
  auto safe = [&](double m, double ph) {
    if (m < 0.0 || m >= 1.0) return kInfinity;
    const double v = f(std::polar(m, ph));
    return std::isnan(v) ? kInfinity : v;
  };
  DiskSearch best;
  double bm = 0.0, bp = 0.0;
  double dm = 1.0 / mag_pts;
  double dp = kTwoPi / phase_pts;
  for (int i = 0; i < mag_pts; ++i)
    for (int k = 0; k < phase_pts; ++k) {
      const double v = safe(i * dm, k * dp);
      if (v < best.value) {
        best.value = v;
        bm = i * dm;
        bp = k * dp;
      }
    }
  if (!std::isfinite(best.value)) return best;
  const int n = 21;
  for (int level = 0; level < zoom_levels; ++level) {
    const double cm = bm, cp = bp;
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        const double m = cm - dm + 2.0 * dm * i / (n - 1);
        const double ph = cp - dp + 2.0 * dp * k / (n - 1);
        const double v = safe(m, ph);
        if (v < best.value) {
          best.value = v;
          bm = m;
          bp = ph;
        }
      }
    dm /= 10.0;
    dp /= 10.0;
  }
  best.rho = std::polar(bm, bp);
  return best;
}

}  // namespace gicb
