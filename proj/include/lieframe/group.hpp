#ifndef LIEFRAME_GROUP_HPP
#define LIEFRAME_GROUP_HPP

#include <functional>
#include <memory>

#include "lieframe/lie_core.hpp"
#include "lieframe/types.hpp"

namespace lieframe {

/// Point of H in the group's canonical chart coordinates. For solvable H the
/// canonical chart is coordinates of the second kind,
/// (a_1..a_r) -> exp(a_1 A_1) ... exp(a_r A_r).
struct GroupPointH {
  Vec coords;
  GroupPointH() = default;
  explicit GroupPointH(Vec c) : coords(std::move(c)) {}
  int dim() const { return static_cast<int>(coords.size()); }
};

enum class ChartKind { SecondKind, Log, Custom };

/// The conormal group H with its chart, products, inverses, Haar density and
/// the coadjoint action on n*. All state is fixed at construction; every
/// method is const and safe to call concurrently.
class HGroup {
 public:
  HGroup(std::shared_ptr<const LieSplitSpec> spec, ChartKind chart = ChartKind::SecondKind);

  /// Installs an explicit chart (e.g. the KAN coordinates used for SL(2,R)):
  /// coords -> matrix, plus an optional closed-form matrix -> coords recovery.
  void set_custom_chart(std::function<Mat(const Vec&)> to_matrix,
                        std::function<Vec(const Mat&)> to_coords);

  /// Closed-form left Haar density in chart coordinates, normalized to 1 at
  /// the identity. Overrides the finite-difference path.
  void set_haar_closed_form(std::function<double(const Vec&)> rho);

  int r() const { return spec_->r_dim; }
  int n() const { return spec_->n_dim; }
  const LieSplitSpec& spec() const { return *spec_; }
  ChartKind chart_kind() const { return chart_; }
  bool has_matrix_chart() const;
  bool h_abelian() const { return h_abelian_; }

  /// True when the eigenvalue form of the weight applies: the chart agrees
  /// with the log map to first order and globally as used (log chart, or a
  /// second-kind chart on an abelian h where the two coincide).
  bool log_like_chart() const;

  GroupPointH identity() const { return GroupPointH(Vec::Zero(r())); }
  GroupPointH product(const GroupPointH& a, const GroupPointH& b) const;
  GroupPointH inverse(const GroupPointH& a) const;

  /// Matrix of the chart point in the realization (throws without one).
  Mat point_matrix(const GroupPointH& a) const;

  /// Chart coordinates of a realization matrix; closed form when installed,
  /// damped Newton from the given start otherwise.
  Vec coords_from_matrix(const Mat& m, const Vec& start) const;

  /// Left Haar density in chart coordinates with rho(0) = 1.
  double haar_density(const Vec& x) const;
  /// Always the finite-difference route |det dm(x,y)/dy|_{y=0}|^{-1}.
  double haar_density_numeric(const Vec& x) const;

  /// Transpose of Ad(h^{-1}) restricted to n: beta_lambda(h) = M(h) lambda.
  Mat coadjoint_transpose(const GroupPointH& h) const;
  /// Ad(h) restricted to n (used by the semidirect product on G = N x| H).
  Mat adjoint_on_n(const GroupPointH& h) const;

  /// ad(A)|_n for the k-th h-basis element (precomputed).
  const Mat& ad_h_on_n(int k) const { return ad_n_[k]; }
  /// ad(.)|_h of an h-coordinate vector.
  Mat ad_on_h(const Vec& a) const;

 private:
  Vec second_kind_to_log(const Vec& a) const;  // compose exp factors via BCH
  Vec log_to_second_kind(const Vec& z) const;  // Newton on the composition
  Vec bch_h(const Vec& x, const Vec& y) const;

  std::shared_ptr<const LieSplitSpec> spec_;
  ChartKind chart_;
  bool h_abelian_ = false;
  std::vector<Mat> ad_n_;   // ad(A_k)|_n
  std::vector<Mat> h_mats_; // realization of A_k, or empty
  std::function<Mat(const Vec&)> to_matrix_;
  std::function<Vec(const Mat&)> to_coords_;
  std::function<double(const Vec&)> haar_closed_;
  // expansion of n-realization matrices, for coadjoint via conjugation
  std::vector<Mat> n_mats_;
  Eigen::ColPivHouseholderQR<Mat> n_span_;
  bool n_span_ready_ = false;
};

/// Element of G = N x| H with exponential coordinates on N; products are
/// exact when n is abelian or nilpotent with a declared step.
struct GroupElementG {
  Vec n_coords;
  GroupPointH h;
};

GroupElementG g_product(const HGroup& group, const GroupElementG& a, const GroupElementG& b);
GroupElementG g_inverse(const HGroup& group, const GroupElementG& a);

}  // namespace lieframe

#endif
