#ifndef LIEFRAME_WINDOWS_HPP
#define LIEFRAME_WINDOWS_HPP

#include <functional>

#include "lieframe/coadjoint.hpp"

namespace lieframe {

/// Real window over chart coordinates of H. Evaluation returns exactly 0
/// outside the declared support box. Breakpoints list the interior smoothness
/// breaks per axis so quadrature can split into polynomial-smooth panels.
struct Window {
  enum class Kind { PouSpline, Parseval, Indicator, Custom };

  std::function<double(const Vec&)> eval;
  Box support;
  std::vector<std::vector<double>> breakpoints;
  int order = 0;  // spline order n of the underlying partition window
  Kind kind = Kind::Custom;

  double operator()(const Vec& t) const {
    if (!support.contains(t)) return 0.0;
    return eval(t);
  }
  bool is_zero() const { return !eval; }
};

/// 1-d partition-of-unity window together with its matched translation step.
struct PartitionWindow1d {
  std::function<double(double)> eval;
  double support_radius = 0.0;
  std::vector<double> breakpoints;
  double step = 0.0;
  int order = 0;
};

/// b_n: the n-fold self-convolution of 1_{[-1/2,1/2]} (so b_1 is the triangle
/// on [-1,1]), evaluated from the exact piecewise-polynomial form.
double bspline(int n, double t);

/// Knot positions of b_n.
std::vector<double> bspline_breakpoints(int n);

/// s_n(t) = b_n(eps*n*t/2)^{1/2}; squared translates along step 2/(eps*n)
/// sum to one.
PartitionWindow1d partition_window_1d(double epsilon, int n);

/// Product window through the second-kind factorization of solvable H:
/// s(h) = prod_k s_k(h_k). Returns the window and the per-axis steps.
std::pair<Window, Vec> product_window_solvable(const HGroup& group,
                                               const std::vector<PartitionWindow1d>& factors);

/// f = |C|^{-1/2} s w^{-1/2} with w(h) = W(Theta(phi(h))).
Window parseval_window(std::shared_ptr<const ThetaChart> chart, const Window& s, double c_volume);

/// f = w^{-1/2} on O, 0 outside; the pullback of W^{-1/2} 1_{Theta(phi(O))}.
Window indicator_window(std::shared_ptr<const ThetaChart> chart);

/// Window from a 1-d partition window placed on one axis group (helper for
/// tests and the CLI when H is 1-dimensional).
Window window_from_1d(const PartitionWindow1d& w);

}  // namespace lieframe

#endif
