#include "lieframe/sampling.hpp"

#include <algorithm>
#include <cmath>

namespace lieframe {

std::vector<std::vector<int>> LatticeGammaN::shell_indices(int shell) const {
  const int r = static_cast<int>(spacing.size());
  std::vector<std::vector<int>> out;
  if (shell == 0) {
    out.push_back(std::vector<int>(r, 0));
    return out;
  }
  // all indices with max-norm == shell, lexicographic
  std::vector<int> idx(r, -shell);
  while (true) {
    int maxabs = 0;
    for (int v : idx) maxabs = std::max(maxabs, std::abs(v));
    if (maxabs == shell) out.push_back(idx);
    int k = r - 1;
    while (k >= 0) {
      if (++idx[k] <= shell) break;
      idx[k] = -shell;
      --k;
    }
    if (k < 0) break;
  }
  return out;
}

std::vector<std::vector<int>> LatticeGammaN::enumerate(int R) const {
  std::vector<std::vector<int>> out;
  for (int s = 0; s <= R; ++s) {
    auto shell = shell_indices(s);
    out.insert(out.end(), shell.begin(), shell.end());
  }
  return out;
}

std::pair<FrequencyBox, LatticeGammaN> compute_frequency_box(const ThetaChart& chart,
                                                             int base_grid) {
  const int r = chart.r();
  const Box& box = chart.domain();
  auto grid_max = [&](int g) {
    double m = 0.0;
    std::size_t total = 1;
    for (int k = 0; k < r; ++k) total *= g;
    for (std::size_t flat = 0; flat < total; ++flat) {
      std::size_t rem = flat;
      Vec t(r);
      for (int k = 0; k < r; ++k) {
        int ik = static_cast<int>(rem % g);
        rem /= g;
        t[k] = box.lo[k] + (box.hi[k] - box.lo[k]) * ik / (g - 1);
      }
      m = std::max(m, chart.theta_unchecked(t).cwiseAbs().maxCoeff());
    }
    return m;
  };
  int g = base_grid;
  double prev = grid_max(g);
  double cur = prev;
  for (int pass = 0; pass < 6; ++pass) {
    g = 2 * g - 1;
    cur = grid_max(g);
    if (std::abs(cur - prev) < 1e-6 * std::max(1.0, cur)) break;
    prev = cur;
    if (pass == 5)
      throw UnsupportedError("compute_frequency_box: grid max did not converge under refinement");
  }
  if (cur < 1e-9)
    throw UnsupportedError("compute_frequency_box: degenerate chart image (empty interior)");

  FrequencyBox fbox;
  fbox.varsigma = 1.001 * cur;
  fbox.r = r;
  fbox.J = chart.index_set();
  fbox.volume = std::pow(2.0 * fbox.varsigma, r);

  LatticeGammaN lattice;
  lattice.spacing = Vec::Constant(r, 1.0 / (2.0 * fbox.varsigma));
  return {fbox, lattice};
}

CoverGammaH build_tiling_cover(const HGroup& group, const Vec& o_radii, const Vec& steps,
                               const Vec& region_radii) {
  if (!group.spec().h_solvable || group.chart_kind() == ChartKind::Custom)
    throw UnsupportedError("build_tiling_cover: needs solvable h in second-kind coordinates");
  const int r = group.r();
  CoverGammaH cover;
  cover.kind = CoverKind::Tiling;
  cover.step = steps;
  if (r == 0) {
    cover.elements.push_back(group.identity());
    return cover;
  }
  std::vector<int> extent(r);
  for (int k = 0; k < r; ++k) {
    if (steps[k] <= 0) throw DimensionError("build_tiling_cover: nonpositive step");
    extent[k] = static_cast<int>(std::ceil((region_radii[k] + o_radii[k]) / steps[k])) + 1;
  }
  std::vector<int> idx(r);
  for (int k = 0; k < r; ++k) idx[k] = -extent[k];
  while (true) {
    Vec coords(r);
    for (int k = 0; k < r; ++k) coords[k] = steps[k] * idx[k];
    cover.elements.emplace_back(coords);
    int k = r - 1;
    while (k >= 0) {
      if (++idx[k] <= extent[k]) break;
      idx[k] = -extent[k];
      --k;
    }
    if (k < 0) break;
  }
  return cover;
}

CoverGammaH build_greedy_cover(const HGroup& group, double region_radius, double z_radius) {
  const int r = group.r();
  if (region_radius <= 0 || z_radius <= 0)
    throw DimensionError("build_greedy_cover: radii must be positive");
  CoverGammaH cover;
  cover.kind = CoverKind::DenseSeparated;
  cover.z_radius = z_radius;
  cover.v_radius = 2.0 * z_radius;

  const double grid_step = z_radius / 2.0;
  const int half = static_cast<int>(std::floor(region_radius / grid_step));
  std::vector<int> idx(r, -half);
  auto separation = [&](const GroupPointH& a, const GroupPointH& b) {
    return group.product(group.inverse(a), b).coords.cwiseAbs().maxCoeff();
  };
  cover.elements.push_back(group.identity());  // seed at e, then scan the grid
  while (true) {
    Vec coords(r);
    for (int k = 0; k < r; ++k) coords[k] = grid_step * idx[k];
    GroupPointH cand(coords);
    bool ok = true;
    for (const auto& e : cover.elements)
      if (separation(e, cand) < z_radius) {
        ok = false;
        break;
      }
    if (ok) cover.elements.push_back(cand);
    int k = r - 1;
    while (k >= 0) {
      if (++idx[k] <= half) break;
      idx[k] = -half;
      --k;
    }
    if (k < 0) break;
  }
  if (cover.elements.empty())
    throw UnsupportedError("build_greedy_cover: produced an empty cover");
  return cover;
}

CoverReport verify_cover(const std::function<double(const Vec&)>& periodization, const Box& box,
                         int points_per_axis) {
  CoverReport report;
  const int d = box.dim();
  std::size_t total = 1;
  for (int k = 0; k < d; ++k) total *= points_per_axis;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rem = flat;
    Vec t(d);
    for (int k = 0; k < d; ++k) {
      int ik = static_cast<int>(rem % points_per_axis);
      rem /= points_per_axis;
      t[k] = box.lo[k] + (box.hi[k] - box.lo[k]) * (ik + 0.5) / points_per_axis;
    }
    double v = periodization(t);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  report.m_hat = lo;
  report.M_hat = hi;
  report.lower_positive = lo > 0.0;
  report.upper_finite = std::isfinite(hi);
  return report;
}

}  // namespace lieframe
