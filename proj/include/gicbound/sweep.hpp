#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gicbound/bound.hpp"
#include "gicbound/channel.hpp"
#include "gicbound/optimize.hpp"

namespace gicb {

// Fixed part of a sweep. A set g2 selects the three-user semi-symmetric
// model (g1 at offset 1, g2 at offset 2); a set custom channel overrides
// both (g1, g2 then only echo h12, h13 in the output).
struct Scenario {
  int K = 3;
  Field field = Field::real;
  double P = 10.0;
  cd g1 = 0.5;
  std::optional<cd> g2;
  std::shared_ptr<const Channel> custom;

  // Throws ConfigError for K < 3, nonpositive P, complex gains in a real
  // scenario or a semi-symmetric K != 3.
  void validate() const;
  Channel channel() const;
};

// Symmetric and three-user circulant channels map to their parametric
// scenarios, anything else is carried as a custom channel.
Scenario scenario_from_channel(const Channel& ch);

enum class Axis { none, alpha, g2, phase, snr_db, K };

Axis parse_axis(const std::string& s);
std::string axis_name(Axis a);

struct SweepSpec {
  Axis axis = Axis::none;
  double start = 0.0;
  double stop = 0.0;
  double step = 1.0;
  Scenario fixed;
  std::vector<std::string> bounds{"all"};
  int threads = 1;
  OptProfile profile = OptProfile::standard();
};

// Scenario at one axis value. alpha and g2 set |g1|^2 keeping its phase
// (positive real when g1 = 0), phase sets arg(g1), snr_db sets P.
Scenario apply_axis(const Scenario& base, Axis axis, double value);

// Grid values; phase grids exclude the end point, other axes include it.
std::vector<double> axis_grid(Axis axis, double start, double stop, double step);

struct Row {
  Scenario scenario;
  Axis axis = Axis::none;
  double axis_value = 0.0;
  BoundResult result;
};
using Table = std::vector<Row>;

// Bound names accepted by evaluate_bounds.
const std::vector<std::string>& known_bounds();
// Expansion of "all" for a scenario.
std::vector<std::string> default_bounds(const Scenario& sc);
// Lower bounds and approximations are not upper bounds.
bool is_upper_bound(const std::string& name);

// Evaluates the named bounds at one scenario, sharing intermediate
// optimizations. Bounds that do not apply to the scenario come back
// infeasible. Unknown names throw ConfigError.
std::vector<BoundResult> evaluate_bounds(const Scenario& sc, const std::vector<std::string>& names,
                                         const OptProfile& prof = OptProfile::standard());

// One row per grid point per bound, grid-major.
Table run_sweep(const SweepSpec& spec);

// Runs fn(i) for i in [0, n) on `threads` workers.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

struct SurfaceSpec {
  double mag1 = 0.3;  // |g1|^2
  double mag2 = 0.3;  // |g2|^2
  double P = 10.0;
  int grid_n = 16;
  int threads = 1;
  OptProfile profile = OptProfile::light();
};

struct Extremum {
  double phi1 = 0.0;
  double phi2 = 0.0;
  double value = 0.0;
  bool is_max = false;
  double dist_max_lines = 0.0;  // 2 phi1 - phi2 + pi = 0, 2 phi2 - phi1 + pi = 0
  double dist_min_lines = 0.0;  // 2 phi1 - phi2 = 0, 2 phi2 - phi1 = 0
};

struct ConjectureReport {
  std::vector<Extremum> extrema;
};

struct Surface {
  SurfaceSpec spec;
  std::vector<double> phases;  // shared by both axes
  std::vector<double> values;  // normalized best upper bound, [i1 * n + i2]
  double tdm = 0.0;            // normalized TDM lower bound
  ConjectureReport report;

  double at(int i1, int i2) const { return values[static_cast<std::size_t>(i1) * phases.size() + i2]; }
};

Surface run_surface(const SurfaceSpec& spec);

// Distance on the torus from (phi1, phi2) to the line a phi1 + b phi2 + c = 0 mod 2 pi.
double torus_line_distance(double phi1, double phi2, double a, double b, double c);
// Strict local extrema over the 8-neighbourhood on the torus.
ConjectureReport conjecture_report(const std::vector<double>& phases, const std::vector<double>& values);

// Rows of a surface in the CSV schema (axis "phase", axis_value = phi1, g1/g2 carry the phases).
Table surface_table(const Surface& s);

struct ReproduceOptions {
  int threads = 1;
  int grid = 16;  // surface grid for fig6/fig8
  OptProfile profile = OptProfile::light();
};

struct NamedTable {
  std::string name;
  Table table;
};

const std::vector<std::string>& figure_ids();
// Data behind one figure; unknown ids throw ConfigError.
std::vector<NamedTable> reproduce(const std::string& figure_id, const ReproduceOptions& opt = {});

// CSV with header k,field,p_linear,g1_re,g1_im,g2_re,g2_im,axis,axis_value,
// bound,sum_rate_bits,normalized,feasible; numbers with 9 significant digits.
void write_csv(std::ostream& os, const Table& t);
std::string format_number(double v);

// True when the table has rows and none of them is feasible.
bool all_infeasible(const Table& t);

}  // namespace gicb
