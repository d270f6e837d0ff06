#include "lieframe/lie_core.hpp"

#include <cmath>
#include <sstream>

namespace lieframe {

namespace {

std::string idx_str(std::initializer_list<int> idx) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (int i : idx) {
    if (!first) os << ",";
    os << i + 1;  // 1-based in messages, matching the spec file format
    first = false;
  }
  os << ")";
  return os.str();
}

}  // namespace

ValidationReport validate_spec(const LieSplitSpec& spec) {
  ValidationReport report;
  const int d = spec.dim();
  if (spec.n_dim < 1 || spec.r_dim < 0)
    throw DimensionError("validate_spec: need n_dim >= 1 and r_dim >= 0");
  if (static_cast<int>(spec.c.size()) != d * d * d)
    throw DimensionError("validate_spec: structure constant array has wrong size");

  // antisymmetry, exact as stored
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        double r = spec.bracket_coeff(i, j, k) + spec.bracket_coeff(j, i, k);
        if (r != 0.0) {
          report.issues.push_back(
              {"antisymmetry", {i, j, k}, std::abs(r),
               "c" + idx_str({i, j, k}) + " + c" + idx_str({j, i, k}) + " != 0"});
        }
      }

  // Jacobi identity on basis triples
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      for (int k = j + 1; k < d; ++k) {
        Vec ei = Vec::Zero(d), ej = Vec::Zero(d), ek = Vec::Zero(d);
        ei[i] = 1.0;
        ej[j] = 1.0;
        ek[k] = 1.0;
        Vec r = bracket(spec, ei, bracket(spec, ej, ek)) +
                bracket(spec, ej, bracket(spec, ek, ei)) +
                bracket(spec, ek, bracket(spec, ei, ej));
        double res = r.cwiseAbs().maxCoeff();
        if (res > 1e-12)
          report.issues.push_back({"jacobi", {i, j, k}, res, "Jacobi residual at " + idx_str({i, j, k})});
      }

  // n is an ideal: [E_i, X_j] has no A-components, exact zeros
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < spec.n_dim; ++j)
      for (int k = spec.n_dim; k < d; ++k) {
        double v = spec.bracket_coeff(i, j, k);
        if (v != 0.0)
          report.issues.push_back({"ideal", {i, j, k}, std::abs(v),
                                   "[E_i, X_j] leaks onto A-part at " + idx_str({i, j, k})});
      }

  // h is a subalgebra: [A_i, A_j] has no X-components
  for (int i = spec.n_dim; i < d; ++i)
    for (int j = spec.n_dim; j < d; ++j)
      for (int k = 0; k < spec.n_dim; ++k) {
        double v = spec.bracket_coeff(i, j, k);
        if (v != 0.0)
          report.issues.push_back({"h_closure", {i, j, k}, std::abs(v),
                                   "[A_i, A_j] leaks onto X-part at " + idx_str({i, j, k})});
      }

  // products on H need one of: abelian h, a declared nilpotency step, or a
  // matrix realization (the BCH series does not terminate otherwise)
  if (spec.r_dim > 0 && spec.matrix_realization.empty() && !spec.nilpotency_step_h) {
    bool h_abelian = true;
    for (int i = spec.n_dim; i < d && h_abelian; ++i)
      for (int j = spec.n_dim; j < d && h_abelian; ++j)
        for (int k = 0; k < d; ++k)
          if (spec.bracket_coeff(i, j, k) != 0.0) {
            h_abelian = false;
            break;
          }
    if (!h_abelian)
      report.issues.push_back({"operability", {}, 0.0,
                               "nonabelian h needs a declared nilpotency step or a matrix "
                               "realization for group products"});
  }

  // matrix realization reproduces the brackets
  if (!spec.matrix_realization.empty()) {
    if (static_cast<int>(spec.matrix_realization.size()) != d) {
      report.issues.push_back({"realization", {}, 0.0, "realization must have one matrix per basis element"});
    } else {
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          Mat comm = spec.matrix_realization[i] * spec.matrix_realization[j] -
                     spec.matrix_realization[j] * spec.matrix_realization[i];
          for (int k = 0; k < d; ++k) comm -= spec.bracket_coeff(i, j, k) * spec.matrix_realization[k];
          double res = comm.cwiseAbs().maxCoeff();
          if (res > 1e-10)
            report.issues.push_back({"realization", {i, j}, res,
                                     "matrix commutator mismatch at " + idx_str({i, j})});
        }
    }
  }
  return report;
}

Vec bracket(const LieSplitSpec& spec, const Vec& u, const Vec& v) {
  const int d = spec.dim();
  if (u.size() != d || v.size() != d) throw DimensionError("bracket: dimension mismatch");
  Vec out = Vec::Zero(d);
  for (int i = 0; i < d; ++i) {
    if (u[i] == 0.0) continue;
    for (int j = 0; j < d; ++j) {
      if (v[j] == 0.0) continue;
      const double uv = u[i] * v[j];
      for (int k = 0; k < d; ++k) out[k] += spec.bracket_coeff(i, j, k) * uv;
    }
  }
  return out;
}

Mat ad_matrix(const LieSplitSpec& spec, const Vec& v, Subspace sub) {
  const int d = spec.dim();
  if (v.size() != d) throw DimensionError("ad_matrix: dimension mismatch");
  int lo = 0, hi = d;
  if (sub == Subspace::N) hi = spec.n_dim;
  if (sub == Subspace::H) lo = spec.n_dim;
  const int m = hi - lo;
  Mat out = Mat::Zero(m, m);
  for (int j = lo; j < hi; ++j) {
    Vec ej = Vec::Zero(d);
    ej[j] = 1.0;
    Vec col = bracket(spec, v, ej);
    if (sub == Subspace::N) {
      // restriction requires n to be invariant under ad(v)
      for (int k = spec.n_dim; k < d; ++k)
        if (std::abs(col[k]) > 1e-12)
          throw UnsupportedError("ad_matrix: n is not invariant under ad(v); ideal condition failed");
    }
    for (int k = lo; k < hi; ++k) out(k - lo, j - lo) = col[k];
  }
  return out;
}

Mat ad_exp(const LieSplitSpec& spec, const Vec& v, double t, Subspace sub) {
  return mat_exp(t * ad_matrix(spec, v, sub));
}

Mat mat_exp(const Mat& m) {
  const int d = static_cast<int>(m.rows());
  if (d == 0) return Mat::Zero(0, 0);
  double norm = m.cwiseAbs().rowwise().sum().maxCoeff();  // inf-norm
  int squarings = 0;
  Mat a = m;
  while (norm > 0.5) {
    a *= 0.5;
    norm *= 0.5;
    ++squarings;
  }
  Mat term = Mat::Identity(d, d);
  Mat sum = term;
  for (int k = 1; k <= 30; ++k) {
    term = (term * a) / static_cast<double>(k);
    sum += term;
    if (term.cwiseAbs().maxCoeff() < 1e-16) break;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

Vec embed_n(const LieSplitSpec& spec, const Vec& xn) {
  if (xn.size() != spec.n_dim) throw DimensionError("embed_n: dimension mismatch");
  Vec out = Vec::Zero(spec.dim());
  out.head(spec.n_dim) = xn;
  return out;
}

Vec embed_h(const LieSplitSpec& spec, const Vec& ah) {
  if (ah.size() != spec.r_dim) throw DimensionError("embed_h: dimension mismatch");
  Vec out = Vec::Zero(spec.dim());
  out.tail(spec.r_dim) = ah;
  return out;
}

void structure_constants_from_realization(LieSplitSpec& spec, double tol) {
  const int d = spec.dim();
  if (static_cast<int>(spec.matrix_realization.size()) != d)
    throw DimensionError("structure_constants_from_realization: realization incomplete");
  const int sz = static_cast<int>(spec.matrix_realization[0].size());
  Mat basis(sz, d);
  for (int i = 0; i < d; ++i)
    basis.col(i) = Eigen::Map<const Vec>(spec.matrix_realization[i].data(), sz);
  Eigen::ColPivHouseholderQR<Mat> qr(basis);
  spec.allocate();
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      Mat comm = spec.matrix_realization[i] * spec.matrix_realization[j] -
                 spec.matrix_realization[j] * spec.matrix_realization[i];
      Vec rhs = Eigen::Map<const Vec>(comm.data(), sz);
      Vec coeff = qr.solve(rhs);
      if ((basis * coeff - rhs).cwiseAbs().maxCoeff() > tol)
        throw UnsupportedError("structure_constants_from_realization: commutator leaves the span");
      for (int k = 0; k < d; ++k) {
        double v = std::abs(coeff[k]) < 1e-13 ? 0.0 : coeff[k];
        if (std::abs(v - std::round(v)) < 1e-12) v = std::round(v);
        if (v != 0.0) spec.set_bracket(i, j, k, v);
      }
    }
}

}  // namespace lieframe
