#include "gicbound/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <numbers>
#include <thread>

#include "gicbound/baselines.hpp"
#include "gicbound/genie3.hpp"
#include "gicbound/kuser.hpp"

namespace gicb {

namespace {

constexpr double kPi = std::numbers::pi;

// Asymmetric K-user evaluators go through dense MI kernels; keep them small.
constexpr int kMaxAsymK = 10;
constexpr int kMaxSearchK = 1000;

bool symmetric(const Scenario& sc) { return !sc.g2.has_value() && !sc.custom; }

cd with_magnitude(cd g, double mag) {
  const double ph = std::abs(g) > 0.0 ? std::arg(g) : 0.0;
  return std::polar(mag, ph);
}

}  // namespace

void Scenario::validate() const {
  if (custom) {
    if (custom->K != K) throw ConfigError("custom channel size does not match K");
    if (K < 3) throw ConfigError("K must be at least 3");
    return;
  }
  if (K < 3) throw ConfigError("K must be at least 3");
  if (!(P > 0.0) || !std::isfinite(P)) throw ConfigError("power must be positive");
  if (!std::isfinite(g1.real()) || !std::isfinite(g1.imag())) throw ConfigError("gain must be finite");
  if (field == Field::real && (g1.imag() != 0.0 || (g2 && g2->imag() != 0.0)))
    throw ConfigError("real scenarios need real gains");
  if (g2 && K != 3) throw ConfigError("semi-symmetric scenarios are three-user");
}

Channel Scenario::channel() const {
  validate();
  if (custom) return *custom;
  if (g2) return make_semi_symmetric(3, {g1, *g2}, P, field);
  return make_symmetric(K, g1, P, field);
}

Scenario scenario_from_channel(const Channel& ch) {
  Scenario sc;
  sc.K = ch.K;
  sc.field = ch.field;
  sc.P = ch.P.empty() ? 0.0 : ch.P[0];
  if (ch.K >= 2) sc.g1 = ch.h(0, 1);
  if (is_symmetric(ch)) return sc;
  if (ch.K == 3 && is_circulant(ch)) {
    sc.g2 = ch.h(0, 2);
    return sc;
  }
  if (ch.K >= 3) sc.g2 = ch.h(0, 2);
  sc.custom = std::make_shared<const Channel>(ch);
  return sc;
}

Axis parse_axis(const std::string& s) {
  if (s == "alpha") return Axis::alpha;
  if (s == "g2") return Axis::g2;
  if (s == "phase") return Axis::phase;
  if (s == "snr_db") return Axis::snr_db;
  if (s == "K" || s == "k") return Axis::K;
  if (s.empty() || s == "none") return Axis::none;
  throw ConfigError("unknown axis: " + s);
}

std::string axis_name(Axis a) {
  switch (a) {
    case Axis::alpha: return "alpha";
    case Axis::g2: return "g2";
    case Axis::phase: return "phase";
    case Axis::snr_db: return "snr_db";
    case Axis::K: return "K";
    case Axis::none: break;
  }
  return "none";
}

Scenario apply_axis(const Scenario& base, Axis axis, double value) {
  Scenario sc = base;
  switch (axis) {
    case Axis::alpha:
      sc.g1 = with_magnitude(base.g1, std::sqrt(alpha_to_gain(value, base.P)));
      break;
    case Axis::g2:
      if (value < 0.0) throw ConfigError("g2 axis values must be nonnegative");
      sc.g1 = with_magnitude(base.g1, std::sqrt(value));
      break;
    case Axis::phase:
      sc.g1 = std::polar(std::abs(base.g1), value);
      break;
    case Axis::snr_db:
      sc.P = std::pow(10.0, value / 10.0);
      break;
    case Axis::K:
      sc.K = static_cast<int>(std::lround(value));
      break;
    case Axis::none:
      break;
  }
  return sc;
}

std::vector<double> axis_grid(Axis axis, double start, double stop, double step) {
  if (axis == Axis::none) return {0.0};
  if (!(step > 0.0)) throw ConfigError("step must be positive");
  if (stop < start) throw ConfigError("stop must not precede start");
  std::vector<double> out;
  const double span = (stop - start) / step;
  const long n = std::lround(std::floor(span + 1e-9));
  const bool exclusive = axis == Axis::phase;
  for (long i = 0; i <= n; ++i) {
    const double v = start + step * static_cast<double>(i);
    if (exclusive && std::abs(span - static_cast<double>(i)) < 1e-9) break;
    out.push_back(v);
  }
  return out;
}

const std::vector<std::string>& known_bounds() {
  static const std::vector<std::string> names = {
      "tin",   "tdm",   "snd",   "best_lower", "kramer", "etw",   "genkramer",   "thm4",
      "zext",  "thm1",  "thm2",  "thm3",       "new_upper", "best_upper", "thm5", "thm6",
      "prop1", "prop2", "prop3", "closed_best", "kub2b", "kub3b", "chain",       "affine"};
  return names;
}

bool is_upper_bound(const std::string& name) {
  return name != "tin" && name != "tdm" && name != "snd" && name != "best_lower" && name != "affine";
}

std::vector<std::string> default_bounds(const Scenario& sc) {
  if (sc.custom && sc.K > 3) return {"tin", "tdm", "best_lower", "kub2b", "kub3b", "chain", "best_upper"};
  if (sc.K == 3) {
    if (symmetric(sc))
      return {"tin", "tdm", "snd", "best_lower", "kramer", "etw", "genkramer",
              "thm4", "zext", "thm1", "thm2", "thm3", "new_upper", "best_upper"};
    return {"tin", "tdm", "best_lower", "zext", "thm1", "thm2", "thm3", "new_upper", "best_upper"};
  }
  std::vector<std::string> out = {"tin", "tdm", "snd", "best_lower", "kramer", "etw",
                                  "prop1", "prop2", "prop3", "closed_best"};
  if (sc.K <= kMaxSearchK) {
    out.push_back("thm5");
    out.push_back("thm6");
  }
  if (sc.K <= 5) out.push_back("kub2b");
  out.push_back("best_upper");
  if (sc.P > 1.0) out.push_back("affine");
  return out;
}

namespace {

class PointEvaluator {
 public:
  PointEvaluator(const Scenario& sc, const OptProfile& prof) : sc_(sc), prof_(prof) { sc.validate(); }

  const BoundResult& get(const std::string& name) {
    auto it = memo_.find(name);
    if (it != memo_.end()) return it->second;
    BoundResult r;
    try {
      r = compute(name);
    } catch (const DomainError&) {
      r = infeasible_result(name, sc_.K);
    } catch (const ConfigError&) {
      r = infeasible_result(name, sc_.K);
    }
    return memo_.emplace(name, std::move(r)).first->second;
  }

 private:
  BoundResult na(const std::string& name) const { return infeasible_result(name, sc_.K); }

  BoundResult min_of(const std::string& name, const std::vector<std::string>& parts) {
    BoundResult best = na(name);
    for (const auto& p : parts) {
      const BoundResult& r = get(p);
      if (better(r, best)) best = r;
    }
    if (best.name != "closed_best") best.source = best.name;
    best.name = name;
    return best;
  }

  // Built on first use; large symmetric scenarios never need the matrix.
  const Channel& ch() {
    if (!ch_) ch_ = sc_.channel();
    return *ch_;
  }

  BoundResult lower(const std::string& name) {
    const int K = sc_.K;
    if (name == "tin" && symmetric(sc_)) return feasible_result(name, K, K * lower_bounds(K, sc_.g1, sc_.P).tin);
    if (name == "tdm" && symmetric(sc_)) return feasible_result(name, K, K * lower_bounds(K, sc_.g1, sc_.P).tdm);
    if (name == "tin") {
      const Channel& c = ch();
      double s = 0.0;
      for (int k = 0; k < K; ++k) {
        double den = 1.0;
        for (int i = 0; i < K; ++i)
          if (i != k) den += std::norm(c.h(k, i)) * c.P[i];
        s += std::log2(1.0 + c.P[k] / den);
      }
      return feasible_result(name, K, s);
    }
    if (name == "tdm") {
      double s = 0.0;
      for (int k = 0; k < K; ++k) s += std::log2(1.0 + K * ch().P[k]) / K;
      return feasible_result(name, K, s);
    }
    if (name == "snd") {
      if (!symmetric(sc_)) return na(name);
      return feasible_result(name, K, K * lower_bounds(K, sc_.g1, sc_.P).snd);
    }
    // best_lower
    BoundResult best = na(name);
    for (const char* p : {"tin", "tdm", "snd"}) {
      const BoundResult& r = get(p);
      if (r.feasible && (!best.feasible || r.sum_rate > best.sum_rate)) best = r;
    }
    best.source = best.name;
    best.name = name;
    return best;
  }

  BoundResult compute(const std::string& name) {
    const int K = sc_.K;
    const bool sym = symmetric(sc_);
    const cd g = sc_.g1;
    const double P = sc_.P;
    if (name == "tin" || name == "tdm" || name == "snd" || name == "best_lower") return lower(name);
    if (name == "kramer") return sym ? kramer_two_user(P, g, K) : na(name);
    if (name == "etw") return sym ? etw_two_user(P, g, K) : na(name);
    if (name == "genkramer") return sym && K == 3 ? gen_kramer_three(ch()) : na(name);
    if (name == "thm4") return sym && K == 3 ? thm4_symmetric(P, g, sc_.field).best : na(name);
    if (name == "zext") return K == 3 ? z_extension_three(ch()) : na(name);
    if (name == "thm1") return K == 3 ? thm1_optimized(ch(), prof_) : na(name);
    if (name == "thm2") return K == 3 ? thm2_optimized(ch(), prof_) : na(name);
    if (name == "thm3") return K == 3 ? thm3_optimized(ch(), prof_) : na(name);
    if (name == "new_upper") return K == 3 ? min_of(name, {"thm1", "thm2", "thm3"}) : na(name);
    if (name == "thm5")
      return sym && K <= kMaxSearchK ? thm5_optimized(K, g, P, sc_.field, prof_) : na(name);
    if (name == "thm6")
      return sym && K <= kMaxSearchK ? thm6_optimized(K, g, P, sc_.field, prof_) : na(name);
    if (name == "prop1") return sym ? prop1_closed(K, g, P) : na(name);
    if (name == "prop2") return sym ? prop2_closed(K, g, P) : na(name);
    if (name == "prop3") return sym ? prop3_search(K, g, P) : na(name);
    if (name == "closed_best") return sym ? closed_form_best(K, g, P) : na(name);
    if (name == "kub2b") return K <= kMaxAsymK ? asym_kub2b_optimized(ch()) : na(name);
    if (name == "kub3b") return K <= kMaxAsymK ? asym_kub3b_optimized(ch(), OptProfile::light()) : na(name);
    if (name == "chain") return K <= kMaxAsymK ? chain_optimized(ch(), OptProfile::light()) : na(name);
    if (name == "affine") {
      if (!sym) return na(name);
      const double a = affine_approx(K, P, g);
      BoundResult r = na(name);
      r.sum_rate = K * a;
      r.normalized = a / 2.0;
      r.feasible = std::isfinite(a);
      return r;
    }
    if (name == "best_upper") {
      if (K == 3) {
        std::vector<std::string> parts = {"thm1", "thm2", "thm3", "zext"};
        if (sym) parts.insert(parts.end(), {"kramer", "etw", "genkramer"});
        return min_of(name, parts);
      }
      if (!sym) return K <= kMaxAsymK ? min_of(name, {"kub2b", "kub3b", "chain"}) : na(name);
      std::vector<std::string> parts = {"kramer", "etw", "closed_best"};
      if (K <= kMaxSearchK) parts.insert(parts.end(), {"thm5", "thm6"});
      if (K <= 5) parts.push_back("kub2b");
      return min_of(name, parts);
    }
    throw ConfigError("unknown bound: " + name);
  }

  Scenario sc_;
  OptProfile prof_;
  std::optional<Channel> ch_;
  std::map<std::string, BoundResult> memo_;
};

void check_names(const std::vector<std::string>& names) {
  const auto& known = known_bounds();
  for (const auto& n : names)
    if (n != "all" && std::find(known.begin(), known.end(), n) == known.end())
      throw ConfigError("unknown bound: " + n);
}

std::vector<std::string> expand(const Scenario& sc, const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const auto& n : names) {
    if (n == "all") {
      for (auto& d : default_bounds(sc))
        if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(d);
    } else if (std::find(out.begin(), out.end(), n) == out.end()) {
      out.push_back(n);
    }
  }
  return out;
}

}  // namespace

std::vector<BoundResult> evaluate_bounds(const Scenario& sc, const std::vector<std::string>& names,
                                         const OptProfile& prof) {
  check_names(names);
  PointEvaluator ev(sc, prof);
  std::vector<BoundResult> out;
  for (const auto& n : expand(sc, names)) out.push_back(ev.get(n));
  return out;
}

void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(1, threads)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr err;
  std::mutex err_mu;
  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!err) err = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

Table run_sweep(const SweepSpec& spec) {
  check_names(spec.bounds);
  const std::vector<double> grid = axis_grid(spec.axis, spec.start, spec.stop, spec.step);
  std::vector<Scenario> scenarios;
  for (double v : grid) scenarios.push_back(apply_axis(spec.fixed, spec.axis, v));
  if (spec.fixed.custom && spec.axis != Axis::none) throw ConfigError("explicit channels cannot be swept");
  for (const auto& sc : scenarios) sc.validate();
  std::vector<std::vector<BoundResult>> results(grid.size());
  parallel_for(grid.size(), spec.threads,
               [&](std::size_t i) { results[i] = evaluate_bounds(scenarios[i], spec.bounds, spec.profile); });
  Table t;
  for (std::size_t i = 0; i < grid.size(); ++i)
    for (auto& r : results[i]) t.push_back(Row{scenarios[i], spec.axis, grid[i], std::move(r)});
  return t;
}

double torus_line_distance(double phi1, double phi2, double a, double b, double c) {
  double r = std::fmod(a * phi1 + b * phi2 + c, 2.0 * kPi);
  if (r > kPi) r -= 2.0 * kPi;
  if (r < -kPi) r += 2.0 * kPi;
  return std::abs(r) / std::hypot(a, b);
}

ConjectureReport conjecture_report(const std::vector<double>& phases, const std::vector<double>& values) {
  const int n = static_cast<int>(phases.size());
  ConjectureReport rep;
  auto at = [&](int i, int j) {
    return values[static_cast<std::size_t>((i + n) % n) * n + static_cast<std::size_t>((j + n) % n)];
  };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double v = at(i, j);
      bool is_max = true, is_min = true;
      for (int di = -1; di <= 1; ++di)
        for (int dj = -1; dj <= 1; ++dj) {
          if (di == 0 && dj == 0) continue;
          const double w = at(i + di, j + dj);
          if (!(v > w)) is_max = false;
          if (!(v < w)) is_min = false;
        }
      if (!is_max && !is_min) continue;
      Extremum e;
      e.phi1 = phases[i];
      e.phi2 = phases[j];
      e.value = v;
      e.is_max = is_max;
      e.dist_max_lines = std::min(torus_line_distance(e.phi1, e.phi2, 2, -1, kPi),
                                  torus_line_distance(e.phi1, e.phi2, -1, 2, kPi));
      e.dist_min_lines = std::min(torus_line_distance(e.phi1, e.phi2, 2, -1, 0),
                                  torus_line_distance(e.phi1, e.phi2, -1, 2, 0));
      rep.extrema.push_back(e);
    }
  }
  return rep;
}

Surface run_surface(const SurfaceSpec& spec) {
  if (spec.grid_n < 8) throw ConfigError("surface grid needs at least 8 points per axis");
  if (spec.mag1 < 0.0 || spec.mag2 < 0.0) throw ConfigError("gain magnitudes must be nonnegative");
  Surface s;
  s.spec = spec;
  const int n = spec.grid_n;
  for (int i = 0; i < n; ++i) s.phases.push_back(2.0 * kPi * i / n);
  s.values.assign(static_cast<std::size_t>(n) * n, kInfinity);
  parallel_for(s.values.size(), spec.threads, [&](std::size_t idx) {
    Scenario sc;
    sc.K = 3;
    sc.field = Field::complex;
    sc.P = spec.P;
    sc.g1 = std::polar(std::sqrt(spec.mag1), s.phases[idx / n]);
    sc.g2 = std::polar(std::sqrt(spec.mag2), s.phases[idx % n]);
    s.values[idx] = evaluate_bounds(sc, {"best_upper"}, spec.profile)[0].normalized;
  });
  s.tdm = std::log2(1.0 + 3.0 * spec.P) / 6.0;
  s.report = conjecture_report(s.phases, s.values);
  return s;
}

Table surface_table(const Surface& s) {
  Table t;
  const int n = static_cast<int>(s.phases.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Scenario sc;
      sc.K = 3;
      sc.field = Field::complex;
      sc.P = s.spec.P;
      sc.g1 = std::polar(std::sqrt(s.spec.mag1), s.phases[i]);
      sc.g2 = std::polar(std::sqrt(s.spec.mag2), s.phases[j]);
      const double v = s.at(i, j);
      BoundResult r = feasible_result("best_upper", 3, 6.0 * v);
      BoundResult lo = feasible_result("tdm", 3, 6.0 * s.tdm);
      t.push_back(Row{sc, Axis::phase, s.phases[i], r});
      t.push_back(Row{sc, Axis::phase, s.phases[i], lo});
    }
  return t;
}

const std::vector<std::string>& figure_ids() {
  static const std::vector<std::string> ids = {"fig1", "fig4", "fig4a", "fig11", "fig12",
                                               "fig13-like", "fig2", "fig5", "fig6", "fig8"};
  return ids;
}

namespace {

SweepSpec base_spec(const ReproduceOptions& opt) {
  SweepSpec s;
  s.threads = opt.threads;
  s.profile = opt.profile;
  return s;
}

void append(Table& dst, Table src) {
  for (auto& r : src) dst.push_back(std::move(r));
}

std::string tag(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

}  // namespace

std::vector<NamedTable> reproduce(const std::string& id, const ReproduceOptions& opt) {
  const std::vector<std::string> lower = {"tin", "tdm", "snd", "best_lower"};
  const std::vector<std::string> closed = {"tin", "tdm", "snd", "best_lower", "kramer",
                                           "prop1", "prop2", "prop3", "closed_best"};
  if (id == "fig1" || id == "fig4" || id == "fig4a") {
    SweepSpec s = base_spec(opt);
    s.fixed.K = 3;
    s.fixed.field = Field::real;
    s.fixed.g1 = 1.0;
    s.step = 0.05;
    if (id == "fig1") {
      s.axis = Axis::g2;
      s.start = 0.0;
      s.stop = 1.0;
      s.fixed.P = 10.0;
    } else {
      s.axis = Axis::alpha;
      s.start = id == "fig4" ? -1.0 : 0.0;
      s.stop = id == "fig4" ? 1.0 : 2.0;
      s.fixed.P = id == "fig4" ? 10.0 : 100.0;
    }
    return {{id, run_sweep(s)}};
  }
  if (id == "fig11") {
    Table t;
    for (int K : {3, 5, 10, 100}) {
      SweepSpec s = base_spec(opt);
      s.axis = Axis::g2;
      s.start = 0.0;
      s.stop = 2.0;
      s.step = 0.02;
      s.fixed.K = K;
      s.fixed.P = 10.0;
      s.fixed.g1 = 1.0;
      s.bounds = closed;
      append(t, run_sweep(s));
    }
    return {{id, std::move(t)}};
  }
  if (id == "fig12") {
    std::vector<NamedTable> out;
    for (double P : {5.0, 100.0}) {
      SweepSpec s = base_spec(opt);
      s.axis = Axis::g2;
      s.start = 0.0;
      s.stop = 2.0;
      s.step = 0.02;
      s.fixed.K = 100000;
      s.fixed.P = P;
      s.fixed.g1 = 1.0;
      s.bounds = closed;
      s.bounds.push_back("affine");
      out.push_back({id + "_p" + tag(P), run_sweep(s)});
    }
    return out;
  }
  if (id == "fig13-like") {
    Table t;
    for (int K : {3, 5, 10, 30, 100, 1000}) {
      SweepSpec s = base_spec(opt);
      s.axis = Axis::snr_db;
      s.start = 0.0;
      s.stop = 60.0;
      s.step = 2.0;
      s.fixed.K = K;
      s.fixed.g1 = std::sqrt(1.1);
      s.bounds = {"prop2", "prop3", "closed_best", "snd", "tdm", "best_lower", "affine"};
      append(t, run_sweep(s));
    }
    return {{id, std::move(t)}};
  }
  if (id == "fig2" || id == "fig5") {
    Table t;
    std::vector<double> phis;
    if (id == "fig2")
      for (int i = 0; i < 32; ++i) phis.push_back(kPi * i / 16.0);
    else
      for (int i = 0; i <= 4; ++i) phis.push_back(kPi * i / 8.0);
    for (double phi : phis) {
      SweepSpec s = base_spec(opt);
      s.axis = Axis::g2;
      s.start = 0.0;
      s.stop = 2.0;
      s.step = id == "fig2" ? 0.25 : 0.1;
      s.fixed.K = id == "fig2" ? 3 : 4;
      s.fixed.field = Field::complex;
      s.fixed.P = 10.0;
      s.fixed.g1 = std::polar(1.0, phi);
      s.bounds = {"best_upper", "tdm", "best_lower"};
      append(t, run_sweep(s));
    }
    return {{id, std::move(t)}};
  }
  if (id == "fig6" || id == "fig8") {
    std::vector<std::pair<double, double>> mags;
    if (id == "fig6")
      mags = {{0.1, 0.1}, {0.3, 0.3}, {0.5, 0.5}, {0.7, 0.7}};
    else
      mags = {{0.3, 0.7}};
    std::vector<NamedTable> out;
    for (auto [m1, m2] : mags) {
      SurfaceSpec s;
      s.mag1 = m1;
      s.mag2 = m2;
      s.P = 10.0;
      s.grid_n = opt.grid;
      s.threads = opt.threads;
      s.profile = opt.profile;
      out.push_back({id + "_" + tag(m1) + "_" + tag(m2), surface_table(run_surface(s))});
    }
    return out;
  }
  throw ConfigError("unknown figure id: " + id);
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

void write_csv(std::ostream& os, const Table& t) {
  os << "k,field,p_linear,g1_re,g1_im,g2_re,g2_im,axis,axis_value,bound,sum_rate_bits,normalized,feasible\n";
  for (const Row& r : t) {
    const Scenario& sc = r.scenario;
    os << sc.K << ',' << (sc.field == Field::real ? "real" : "complex") << ',' << format_number(sc.P) << ','
       << format_number(sc.g1.real()) << ',' << format_number(sc.g1.imag()) << ',';
    if (sc.g2)
      os << format_number(sc.g2->real()) << ',' << format_number(sc.g2->imag());
    else
      os << ',';
    os << ',' << axis_name(r.axis) << ',' << format_number(r.axis_value) << ',' << r.result.name << ','
       << format_number(r.result.sum_rate) << ',' << format_number(r.result.normalized) << ','
       << (r.result.feasible ? 1 : 0) << '\n';
  }
}

bool all_infeasible(const Table& t) {
  return !t.empty() && std::none_of(t.begin(), t.end(), [](const Row& r) { return r.result.feasible; });
}

}  // namespace gicb
