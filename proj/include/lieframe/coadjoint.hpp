#ifndef LIEFRAME_COADJOINT_HPP
#define LIEFRAME_COADJOINT_HPP

#include <memory>
#include <vector>

#include "lieframe/group.hpp"

namespace lieframe {

/// beta_lambda(h) = Ad(h^{-1})* lambda, as coefficients over X*_1..X*_n.
Vec beta_eval(const HGroup& group, const Vec& lambda, const GroupPointH& h);

/// D_omega with (D)_{jk} = <omega, [X_j, A_k]>; the Jacobian of
/// beta_omega o phi^{-1} at the origin in the fixed bases.
Mat coadjoint_jacobian(const LieSplitSpec& spec, const Vec& omega);

struct ImmersionReport {
  Mat D;
  double gram_det = 0.0;  // det(D^T D)
  double threshold = 0.0;
  double condition_number = 0.0;
  std::vector<int> J;  // increasing; empty when the check fails
  bool passed = false;
};

/// Evaluates the immersion polynomial det(D^T D) at omega with a
/// scale-relative pass threshold.
ImmersionReport immersion_check(const LieSplitSpec& spec, const Vec& omega);

/// Row subset J (|J| = r) maximizing the selected submatrix determinant via
/// column-pivoted elimination on D^T; deterministic lexicographic tie-break.
/// Throws on rank deficiency. Returned in increasing order.
std::vector<int> select_index_set_J(const Mat& D);

enum class WeightMethod { Eigenvalue, Pushforward };

/// The local frequency chart Theta = P* o beta_lambda o phi^{-1} restricted
/// to a validated box O in chart coordinates, with its Newton inverse and the
/// Radon-Nikodym weight W. Immutable after construction.
class ThetaChart {
 public:
  ThetaChart(std::shared_ptr<const HGroup> group, Vec lambda, std::vector<int> J, Vec box_radii);

  const HGroup& group() const { return *group_; }
  std::shared_ptr<const HGroup> group_ptr() const { return group_; }
  const Vec& lambda() const { return lambda_; }
  const std::vector<int>& index_set() const { return J_; }
  const Box& domain() const { return domain_; }
  int r() const { return group_->r(); }

  /// Theta at chart coordinates t; throws ChartDomainError outside O
  /// (pad keeps boundary quadrature nodes usable).
  Vec theta(const Vec& t) const;
  Vec theta_unchecked(const Vec& t) const;
  Mat theta_jacobian(const Vec& t) const;

  /// Damped Newton from the chart center; postcondition
  /// ||Theta(result) - xi||_max <= 1e-10 and result inside O.
  Vec theta_inverse(const Vec& xi) const;

  /// W_lambda(xi). Eigenvalue method needs a log-like chart on exponential H.
  double weight(const Vec& xi, WeightMethod method = WeightMethod::Pushforward) const;

  /// w(h) = W_lambda(Theta(phi(h))) evaluated directly at chart point t,
  /// avoiding the Newton inversion: rho(t) / |det Jac_Theta(t)|.
  double weight_at_point(const Vec& t) const;

  struct Diagnostics {
    double min_singular_value = 0.0;
    double center_singular_value = 0.0;
    double max_image_norm = 0.0;
    int grid_per_axis = 0;
    int halvings = 0;
  };
  const Diagnostics& diagnostics() const { return diag_; }
  Diagnostics& mutable_diagnostics() { return diag_; }

 private:
  std::shared_ptr<const HGroup> group_;
  Vec lambda_;
  std::vector<int> J_;
  Box domain_;
  Diagnostics diag_;
};

/// Shrinks a max-norm box from initial_radii (halving) until the validation
/// grid certifies a nondegenerate injective chart with bounded image.
/// Throws when the radius underflows 1e-6 without passing.
ThetaChart select_neighborhood_O(std::shared_ptr<const HGroup> group, const Vec& lambda,
                                 const std::vector<int>& J, const Vec& initial_radii,
                                 int grid_per_axis = 17);

}  // namespace lieframe

#endif
