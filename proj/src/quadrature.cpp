#include "lieframe/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace lieframe {

namespace {

// Newton on P_n with the three-term recurrence; standard construction of
// Gauss-Legendre rules, accurate to ~1e-15 for the orders used here.
GaussRule build_rule(int order) {
  GaussRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const double pi = 3.14159265358979323846;
  for (int i = 0; i < order; ++i) {
    double x = std::cos(pi * (i + 0.75) / (order + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < order; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = order * (x * p0 - p1) / (x * x - 1.0);
      double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * pp * pp);
  }
  std::reverse(rule.nodes.begin(), rule.nodes.end());
  std::reverse(rule.weights.begin(), rule.weights.end());
  return rule;
}

std::vector<std::pair<double, double>> panels_1d(double a, double b,
                                                 const std::vector<double>& breaks) {
  std::vector<double> cuts;
  cuts.push_back(a);
  for (double c : breaks)
    if (c > a + 1e-15 && c < b - 1e-15) cuts.push_back(c);
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  std::vector<std::pair<double, double>> panels;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    if (cuts[i + 1] - cuts[i] > 1e-15) panels.emplace_back(cuts[i], cuts[i + 1]);
  return panels;
}

}  // namespace

const GaussRule& gauss_legendre(int order) {
  static std::map<int, GaussRule> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, build_rule(order)).first;
  return it->second;
}

double integrate_panel(const std::function<double(double)>& f, double a, double b, int order) {
  const GaussRule& rule = gauss_legendre(order);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double sum = 0.0;
  for (int i = 0; i < order; ++i) sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return sum * half;
}

double integrate_1d(const std::function<double(double)>& f, double a, double b,
                    const std::vector<double>& breakpoints, int order) {
  double sum = 0.0;
  for (auto [lo, hi] : panels_1d(a, b, breakpoints)) sum += integrate_panel(f, lo, hi, order);
  return sum;
}

TensorGrid tensor_grid(const Box& box, const std::vector<std::vector<double>>& breakpoints,
                       int order) {
  const int d = box.dim();
  std::vector<std::vector<std::pair<double, double>>> axis_nodes(d);
  for (int k = 0; k < d; ++k) {
    std::vector<double> brk = k < static_cast<int>(breakpoints.size()) ? breakpoints[k]
                                                                       : std::vector<double>{};
    auto panels = panels_1d(box.lo[k], box.hi[k], brk);
    const double total_width = box.hi[k] - box.lo[k];
    for (auto [lo, hi] : panels) {
      // per-axis node count stays near `order` regardless of panel count;
      // narrow panels keep a floor of 8 nodes
      int panel_order = order;
      if (panels.size() > 1) {
        panel_order = static_cast<int>(std::ceil(order * (hi - lo) / total_width));
        panel_order = std::clamp(panel_order, std::min(8, order), order);
      }
      const GaussRule& rule = gauss_legendre(panel_order);
      const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
      for (int i = 0; i < panel_order; ++i)
        axis_nodes[k].emplace_back(mid + half * rule.nodes[i], half * rule.weights[i]);
    }
  }
  TensorGrid grid;
  std::size_t total = 1;
  for (int k = 0; k < d; ++k) total *= axis_nodes[k].size();
  grid.points.reserve(total);
  grid.weights.reserve(total);
  std::vector<std::size_t> idx(d, 0);
  Vec pt(d);
  for (std::size_t flat = 0; flat < total; ++flat) {
    double w = 1.0;
    for (int k = 0; k < d; ++k) {
      pt[k] = axis_nodes[k][idx[k]].first;
      w *= axis_nodes[k][idx[k]].second;
    }
    grid.points.push_back(pt);
    grid.weights.push_back(w);
    for (int k = d - 1; k >= 0; --k) {
      if (++idx[k] < axis_nodes[k].size()) break;
      idx[k] = 0;
    }
  }
  return grid;
}

double integrate_box(const std::function<double(const Vec&)>& f, const Box& box,
                     const std::vector<std::vector<double>>& breakpoints, int order) {
  TensorGrid grid = tensor_grid(box, breakpoints, order);
  double sum = 0.0;
  for (std::size_t i = 0; i < grid.points.size(); ++i) sum += grid.weights[i] * f(grid.points[i]);
  return sum;
}

Cplx integrate_box_complex(const std::function<Cplx(const Vec&)>& f, const Box& box,
                           const std::vector<std::vector<double>>& breakpoints, int order) {
  TensorGrid grid = tensor_grid(box, breakpoints, order);
  Cplx sum = 0.0;
  for (std::size_t i = 0; i < grid.points.size(); ++i)
    sum += grid.weights[i] * f(grid.points[i]);
  return sum;
}

double integrate_box_adaptive(const std::function<double(const Vec&)>& f, const Box& box,
                              const std::vector<std::vector<double>>& breakpoints,
                              int base_order, double rtol, int max_doublings, bool* converged) {
  double prev = integrate_box(f, box, breakpoints, base_order);
  int order = base_order;
  for (int pass = 0; pass < max_doublings; ++pass) {
    order *= 2;
    double next = integrate_box(f, box, breakpoints, order);
    double scale = std::max({std::abs(prev), std::abs(next), 1e-300});
    if (std::abs(next - prev) / scale < rtol) {
      if (converged) *converged = true;
      return next;
    }
    prev = next;
  }
  if (converged) *converged = false;
  return prev;
}

}  // namespace lieframe
