#pragma once

#include <functional>
#include <vector>

#include "gicbound/bound.hpp"

namespace gicb {

// Grid resolutions for the genie-noise searches.
struct OptProfile {
  int sigma_pts = 101;  // sigma grid on [0, 1]
  int rho_pts = 101;    // |rho| grid on [0, 1]
  int phase_pts = 64;   // arg(rho) grid on [0, 2 pi)
  int sweeps = 3;       // coordinate-descent sweeps for multi-block searches
  int refine_pts = 21;  // points per axis of the 10x local refinement
  int basins = 4;       // extra local polishes from distinct grid basins

  static OptProfile standard() { return {}; }
  // Coarser grids for dense sweeps and surfaces.
  static OptProfile light() { return {26, 26, 16, 2, 11, 2}; }
};

using NoiseObjective = std::function<double(const std::vector<NoiseParam>&)>;

struct NoiseSearch {
  double value = kInfinity;
  std::vector<NoiseParam> params;
};

// Minimizes f over `blocks` noise parameters by coordinate grid descent
// followed by a local refinement and compass-search polishes. f returns
// +inf at infeasible points. Real fields restrict rho to [-1, 1]. Seeds are
// evaluated first; the best seed starts the descent. Blocks flagged in sigma_only keep rho = 0.
NoiseSearch minimize_noise(const NoiseObjective& f, std::size_t blocks, Field field,
                           const OptProfile& profile,
                           const std::vector<std::vector<NoiseParam>>& seeds = {},
                           const std::vector<bool>& sigma_only = {});

struct ScalarSearch {
  double x = 0.0;
  double value = kInfinity;
};

// Grid over [lo, hi] with `pts` points, then a 10x zoom around the incumbent
// and a golden-section polish inside the final bracket.
ScalarSearch minimize_scalar(const std::function<double(double)>& f, double lo, double hi,
                             int pts);

// Minimizes f(rho) over the open unit disk: magnitude/phase grid followed by
// repeated 10x zooms around the incumbent.
struct DiskSearch {
  cd rho = 0.0;
  double value = kInfinity;
};
DiskSearch minimize_disk(const std::function<double(cd)>& f, int mag_pts, int phase_pts,
                         int zoom_levels = 4);

// Golden-section search for a unimodal f on [a, b].
ScalarSearch golden_section(const std::function<double(double)>& f, double a, double b,
                            double tol = 1e-12, int max_iter = 200);

}  // namespace gicb
