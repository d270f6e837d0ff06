#include "lieframe/windows.hpp"

#include <cmath>

namespace lieframe {

namespace {

double binomial(int n, int k) {
  double v = 1.0;
  for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
  return v;
}

double factorial(int n) {
  double v = 1.0;
  for (int i = 2; i <= n; ++i) v *= i;
  return v;
}

constexpr double kSupportPad = 1e-12;

}  // namespace

double bspline(int n, double t) {
  if (n < 1) throw DimensionError("bspline: order must be >= 1");
  const int m = n + 1;  // number of convolved indicator factors
  const double half = m / 2.0;
  if (t <= -half || t >= half) return 0.0;
  // truncated power form of the centered cardinal B-spline
  double sum = 0.0;
  double sign = 1.0;
  for (int k = 0; k <= m; ++k) {
    double u = t + half - k;
    if (u > 0.0) sum += sign * binomial(m, k) * std::pow(u, m - 1);
    sign = -sign;
  }
  return sum / factorial(m - 1);
}

std::vector<double> bspline_breakpoints(int n) {
  const int m = n + 1;
  std::vector<double> knots;
  for (int k = 0; k <= m; ++k) knots.push_back(-m / 2.0 + k);
  return knots;
}

PartitionWindow1d partition_window_1d(double epsilon, int n) {
  if (epsilon <= 0) throw DimensionError("partition_window_1d: epsilon must be positive");
  if (n < 1) throw DimensionError("partition_window_1d: order must be >= 1");
  PartitionWindow1d w;
  const double scale = epsilon * n / 2.0;
  w.eval = [n, scale](double t) {
    double v = bspline(n, scale * t);
    return v > 0.0 ? std::sqrt(v) : 0.0;
  };
  w.support_radius = (n + 1) / (epsilon * n);
  for (double knot : bspline_breakpoints(n)) {
    double t = knot / scale;
    if (t > -w.support_radius && t < w.support_radius) w.breakpoints.push_back(t);
  }
  w.step = 2.0 / (epsilon * n);
  w.order = n;
  return w;
}

std::pair<Window, Vec> product_window_solvable(const HGroup& group,
                                               const std::vector<PartitionWindow1d>& factors) {
  if (!group.spec().h_solvable || group.chart_kind() == ChartKind::Custom)
    throw UnsupportedError("product_window_solvable: needs solvable h in second-kind coordinates");
  const int r = group.r();
  if (static_cast<int>(factors.size()) != r)
    throw DimensionError("product_window_solvable: one factor per h-basis direction required");
  Window w;
  w.kind = Window::Kind::PouSpline;
  Vec radii(r);
  Vec steps(r);
  int order = factors.empty() ? 0 : factors[0].order;
  for (int k = 0; k < r; ++k) {
    radii[k] = factors[k].support_radius;
    steps[k] = factors[k].step;
    w.breakpoints.push_back(factors[k].breakpoints);
    order = std::min(order, factors[k].order);
  }
  w.order = order;
  w.support = Box::centered(radii);
  w.eval = [factors](const Vec& t) {
    double v = 1.0;
    for (std::size_t k = 0; k < factors.size(); ++k) v *= factors[k].eval(t[static_cast<int>(k)]);
    return v;
  };
  return {w, steps};
}

Window parseval_window(std::shared_ptr<const ThetaChart> chart, const Window& s,
                       double c_volume) {
  const Box& o = chart->domain();
  for (int k = 0; k < o.dim(); ++k)
    if (s.support.lo[k] < o.lo[k] - 1e-12 || s.support.hi[k] > o.hi[k] + 1e-12)
      throw ChartDomainError("parseval_window: s must be supported inside O");
  Window f;
  f.kind = Window::Kind::Parseval;
  f.order = s.order;
  f.breakpoints = s.breakpoints;
  Vec pad = Vec::Constant(o.dim(), kSupportPad).cwiseMax(kSupportPad * s.support.radii());
  f.support = Box(s.support.lo + pad, s.support.hi - pad);
  const double norm = 1.0 / std::sqrt(c_volume);
  f.eval = [chart, s, norm](const Vec& t) {
    double sv = s(t);
    if (sv == 0.0) return 0.0;
    double w = chart->weight_at_point(t);
    if (w <= 0.0) throw ChartDegeneracyError("parseval_window: nonpositive weight on support");
    return norm * sv / std::sqrt(w);
  };
  return f;
}

Window indicator_window(std::shared_ptr<const ThetaChart> chart) {
  const Box& o = chart->domain();
  Window f;
  f.kind = Window::Kind::Indicator;
  f.order = 0;
  Vec pad = kSupportPad * o.radii();
  f.support = Box(o.lo + pad, o.hi - pad);
  f.breakpoints.assign(o.dim(), {});
  f.eval = [chart](const Vec& t) {
    double w = chart->weight_at_point(t);
    if (w <= 0.0) throw ChartDegeneracyError("indicator_window: nonpositive weight on O");
    return 1.0 / std::sqrt(w);
  };
  return f;
}

Window window_from_1d(const PartitionWindow1d& w) {
  Window out;
  out.kind = Window::Kind::PouSpline;
  out.order = w.order;
  out.support = Box::centered(Vec::Constant(1, w.support_radius));
  out.breakpoints = {w.breakpoints};
  out.eval = [w](const Vec& t) { return w.eval(t[0]); };
  return out;
}

}  // namespace lieframe
