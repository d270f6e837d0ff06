#ifndef LIEFRAME_FRAME_ANALYSIS_HPP
#define LIEFRAME_FRAME_ANALYSIS_HPP

#include <optional>

#include "lieframe/sampling.hpp"
#include "lieframe/windows.hpp"

namespace lieframe {

/// Index of one frame element pi(ell^{-1}) pi(exp(PX)) f.
struct FrameIndex {
  GroupPointH ell;
  std::vector<int> kappa;  // multi-index into Gamma_N
};

struct QuadConfig {
  int base_order = 32;
  double rtol = 1e-8;
  int max_doublings = 3;
};

struct TruncationConfig {
  int max_shell = 64;
  double tail_rtol = 1e-4;
};

/// pi(exp X) f at h for X in n-coordinates: e^{2 pi i <beta(h), X>} f(h).
Cplx rep_apply_modulation(const ThetaChart& chart, const Vec& x_in_n, const Window& f,
                          const GroupPointH& h);

/// pi(z) f at h: f(z^{-1} h).
double rep_apply_translation(const ThetaChart& chart, const GroupPointH& z, const Window& f,
                             const GroupPointH& h);

/// Value of the frame element indexed by (ell, kappa) at h.
Cplx frame_element_value(const ThetaChart& chart, const Window& f, const LatticeGammaN& lattice,
                         const FrameIndex& gamma, const GroupPointH& h);

/// I_{g,f,ell,X} by tensor Gauss-Legendre over the support of f, order
/// doubled until the relative change is below quad.rtol.
Cplx frame_coefficient(const ThetaChart& chart, const Window& g, const Window& f,
                       const FrameIndex& gamma, const LatticeGammaN& lattice,
                       const QuadConfig& quad = {}, bool* converged = nullptr);

/// F(h) = sum_{ell} |f(ell h)|^2 w(ell h); only cover elements that land the
/// point in supp f contribute.
double periodization_F(const ThetaChart& chart, const Window& f, const CoverGammaH& cover,
                       const GroupPointH& h);

/// ||f||^2 with respect to the Haar measure in chart coordinates.
double window_norm_sq(const ThetaChart& chart, const Window& f, const QuadConfig& quad = {});

struct BoundsResult {
  double m_hat = 0.0;
  double M_hat = 0.0;
  double A = 0.0;
  double B = 0.0;
  double f_norm_sq = 0.0;
  bool is_frame = false;       // m_hat > 0
  bool tight = false;          // m_hat = M_hat within 1e-9
  bool onb_candidate = false;  // A = B = 1 and ||f|| = 1 within 1e-6
  int grid_points_per_axis = 0;
  double grid_change = 0.0;
};

/// Grid essinf/esssup of the periodization over a fundamental box, refined by
/// doubling until the extremes move less than 1e-6.
BoundsResult estimate_frame_bounds(const ThetaChart& chart, const Window& f,
                                   const CoverGammaH& cover, double c_volume,
                                   const Box& fundamental, int grid_density = 64);

struct FrameSumResult {
  double value = 0.0;
  double tail_increment = 0.0;  // relative size of the last max-norm shell
  int shells_used = 0;
  bool tail_converged = false;
  bool quad_converged = true;
  int cover_terms = 0;
};

/// s(Gamma_H, Gamma_N, g, f): coefficients summed over the pruned cover and
/// max-norm shells of Gamma_N until the shell increment drops below
/// trunc.tail_rtol.
FrameSumResult frame_sum(const ThetaChart& chart, const Window& g, const Window& f,
                         const CoverGammaH& cover, const LatticeGammaN& lattice,
                         const QuadConfig& quad = {}, const TruncationConfig& trunc = {});

struct OracleResult {
  double lhs = 0.0;  // coefficient-side sum
  double rhs = 0.0;  // |C| integral of |g|^2 F
  double residual = 0.0;
  FrameSumResult sum;
};

/// Both sides of s(...) = |C| int |g|^2 F dmu computed independently.
/// A precomputed coefficient-side sum can be passed to avoid recomputation.
OracleResult oracle_identity_check(const ThetaChart& chart, const Window& g, const Window& f,
                                   const CoverGammaH& cover, const LatticeGammaN& lattice,
                                   double c_volume, const QuadConfig& quad = {},
                                   const TruncationConfig& trunc = {},
                                   const FrameSumResult* precomputed_sum = nullptr);

/// Max-norm residual ||Gram - Id|| over the patch of frame elements indexed
/// by ells x kappas. Requires abelian H (pairwise supports are translated
/// boxes there).
double verify_onb_gram_residual(const ThetaChart& chart, const Window& f,
                                const std::vector<GroupPointH>& ells,
                                const std::vector<std::vector<int>>& kappas,
                                const LatticeGammaN& lattice, const QuadConfig& quad = {});

/// Self-consistency of the necessity direction: A/|C| <= m_hat and
/// M_hat <= B/|C| within tol.
bool necessity_check(double A, double B, double m_hat, double M_hat, double c_volume,
                     double tol = 1e-9);

/// Seeded test functions: random linear combinations of <= 5 translated
/// partition-of-unity bumps inside the given region.
Window random_bump_combination(Rng& rng, const Box& region, int max_bumps = 5, int order = 4);

}  // namespace lieframe

#endif
