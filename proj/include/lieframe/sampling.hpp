#ifndef LIEFRAME_SAMPLING_HPP
#define LIEFRAME_SAMPLING_HPP

#include <functional>

#include "lieframe/coadjoint.hpp"

namespace lieframe {

/// Frequency cube C = prod [-varsigma, varsigma) along the J-axes, or (for
/// catalog entries where the image itself tiles) C = Theta(phi(O)) with the
/// cube data replaced by the image volume.
struct FrequencyBox {
  double varsigma = 0.0;
  int r = 0;
  std::vector<int> J;
  double volume = 0.0;
  bool image_is_C = false;  // C equals the chart image rather than a cube
};

/// Dual lattice in exp(p): frequencies spacing_k * Z along each J-axis,
/// enumerated by increasing max-norm shell, lexicographic within a shell.
struct LatticeGammaN {
  Vec spacing;
  int truncation_radius = 0;

  Vec frequency(const std::vector<int>& index) const {
    Vec y(spacing.size());
    for (int k = 0; k < spacing.size(); ++k) y[k] = spacing[k] * index[k];
    return y;
  }

  /// Multi-indices with max-norm exactly `shell` (shell 0 = origin).
  std::vector<std::vector<int>> shell_indices(int shell) const;
  /// All multi-indices with max-norm <= R in enumeration order.
  std::vector<std::vector<int>> enumerate(int R) const;
};

enum class CoverKind { Tiling, DenseSeparated };

struct CoverGammaH {
  std::vector<GroupPointH> elements;
  CoverKind kind = CoverKind::Tiling;
  Vec step;              // tiling: coordinate steps per axis
  double z_radius = 0.0; // greedy: separation radius
  double v_radius = 0.0; // greedy: density radius (2Z by construction)
};

/// Builds C and Gamma_N from the chart: varsigma is the grid max of
/// ||Theta||_max under doubling refinement (tolerance 1e-6), times 1.001.
std::pair<FrequencyBox, LatticeGammaN> compute_frequency_box(const ThetaChart& chart,
                                                             int base_grid = 33);

/// Coordinate lattice steps[k] * Z per axis through the second-kind
/// factorization, enumerated to cover region_radii (expanded by the O box).
/// Requires solvable h with the second-kind chart.
CoverGammaH build_tiling_cover(const HGroup& group, const Vec& o_radii, const Vec& steps,
                               const Vec& region_radii);

/// Greedy maximal Z-separated subset of a lexicographic grid over the
/// coordinate box of the given radius; Z-separated and 2Z-dense.
CoverGammaH build_greedy_cover(const HGroup& group, double region_radius, double z_radius);

struct CoverReport {
  double m_hat = 0.0;
  double M_hat = 0.0;
  bool lower_positive = false;
  bool upper_finite = false;
};

/// Evaluates a periodization F over a grid on the box and reports the
/// extremes (essinf/esssup surrogate).
CoverReport verify_cover(const std::function<double(const Vec&)>& periodization, const Box& box,
                         int points_per_axis);

}  // namespace lieframe

#endif
