#ifndef LIEFRAME_LIE_CORE_HPP
#define LIEFRAME_LIE_CORE_HPP

#include <optional>
#include <string>
#include <vector>

#include "lieframe/types.hpp"

namespace lieframe {

/// Split Lie algebra g = n (+) h given by structure constants over the
/// combined basis E = (X_1..X_n, A_1..A_r). n is required to be an ideal.
struct LieSplitSpec {
  std::string name;
  int n_dim = 0;
  int r_dim = 0;
  std::vector<double> c;  // dense d*d*d, index (i*d + j)*d + k, all 0-based
  std::optional<int> nilpotency_step_n;
  std::optional<int> nilpotency_step_h;
  std::vector<Mat> matrix_realization;  // one square matrix per basis element, or empty
  bool h_solvable = false;
  bool h_exponential = false;

  int dim() const { return n_dim + r_dim; }

  void allocate() { c.assign(static_cast<std::size_t>(dim()) * dim() * dim(), 0.0); }

  double bracket_coeff(int i, int j, int k) const {
    return c[(static_cast<std::size_t>(i) * dim() + j) * dim() + k];
  }

  /// Sets c_{ij}^k = v and c_{ji}^k = -v.
  void set_bracket(int i, int j, int k, double v) {
    c[(static_cast<std::size_t>(i) * dim() + j) * dim() + k] = v;
    c[(static_cast<std::size_t>(j) * dim() + i) * dim() + k] = -v;
  }

  bool is_n_index(int i) const { return i < n_dim; }
};

enum class Subspace { Full, N, H };

struct ValidationIssue {
  std::string invariant;     // antisymmetry | jacobi | ideal | realization | h_closure
  std::vector<int> indices;  // basis indices involved (0-based)
  double residual = 0.0;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool passed() const { return issues.empty(); }
};

/// Checks antisymmetry, the Jacobi identity, the ideal condition on n,
/// closure of h, and consistency of an attached matrix realization.
ValidationReport validate_spec(const LieSplitSpec& spec);

/// [u, v] = sum c_{ij}^k u_i v_j E_k over the combined basis.
Vec bracket(const LieSplitSpec& spec, const Vec& u, const Vec& v);

/// Matrix of ad(v) on the chosen subspace in the fixed basis.
/// Restriction to n requires the ideal condition (validated by caller).
Mat ad_matrix(const LieSplitSpec& spec, const Vec& v, Subspace sub);

/// exp(t ad(v)) on the chosen subspace.
Mat ad_exp(const LieSplitSpec& spec, const Vec& v, double t, Subspace sub);

/// Scaling-and-squaring matrix exponential with a Taylor core; intended for
/// the small dense matrices that appear here (absolute tolerance ~1e-14).
Mat mat_exp(const Mat& m);

/// Embeds a subspace vector into combined-basis coordinates.
Vec embed_n(const LieSplitSpec& spec, const Vec& xn);
Vec embed_h(const LieSplitSpec& spec, const Vec& ah);

/// Recovers structure constants from a matrix realization by expanding
/// commutators over the basis (least squares; throws if the expansion
/// residual exceeds tol).
void structure_constants_from_realization(LieSplitSpec& spec, double tol = 1e-9);

}  // namespace lieframe

#endif
