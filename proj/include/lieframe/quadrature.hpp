#ifndef LIEFRAME_QUADRATURE_HPP
#define LIEFRAME_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "lieframe/types.hpp"

namespace lieframe {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Rule of the given order, cached after first use.
const GaussRule& gauss_legendre(int order);

/// Integrates f over [a, b] with a single Gauss panel.
double integrate_panel(const std::function<double(double)>& f, double a, double b, int order);

/// 1-d integration split at the given breakpoints (clipped to [a, b]).
double integrate_1d(const std::function<double(double)>& f, double a, double b,
                    const std::vector<double>& breakpoints, int order);

/// Tensor-product quadrature over a box. Integrand sees the full point.
/// Per-axis breakpoints split the box into smooth panels; pass empty lists
/// when the integrand is smooth. Complex-valued variant shares node layout.
double integrate_box(const std::function<double(const Vec&)>& f, const Box& box,
                     const std::vector<std::vector<double>>& breakpoints, int order);

Cplx integrate_box_complex(const std::function<Cplx(const Vec&)>& f, const Box& box,
                           const std::vector<std::vector<double>>& breakpoints, int order);

/// Doubles the order until the relative change drops below rtol or
/// max_doublings is hit. Returns the last value; sets *converged if given.
double integrate_box_adaptive(const std::function<double(const Vec&)>& f, const Box& box,
                              const std::vector<std::vector<double>>& breakpoints,
                              int base_order, double rtol, int max_doublings,
                              bool* converged = nullptr);

/// Nodes/weights of the tensor rule over a box, materialized once so several
/// integrands can share the same evaluation points.
struct TensorGrid {
  std::vector<Vec> points;
  std::vector<double> weights;
};

TensorGrid tensor_grid(const Box& box, const std::vector<std::vector<double>>& breakpoints,
                       int order);

}  // namespace lieframe

#endif
