#include "lieframe/group.hpp"

#include <cmath>

namespace lieframe {

namespace {

constexpr double kFdStep = 1e-6;
constexpr int kNewtonMaxIter = 50;
constexpr double kNewtonTol = 1e-12;

/// Damped Newton for f(x) = target, f: R^d -> R^m (m >= d), FD Jacobian.
Vec newton_solve(const std::function<Vec(const Vec&)>& f, const Vec& target, const Vec& start,
                 const char* what) {
  Vec x = start;
  double res = (f(x) - target).cwiseAbs().maxCoeff();
  for (int it = 0; it < kNewtonMaxIter; ++it) {
    if (res <= kNewtonTol) return x;
    Vec fx = f(x);
    const int d = static_cast<int>(x.size());
    const int m = static_cast<int>(fx.size());
    Mat jac(m, d);
    for (int k = 0; k < d; ++k) {
      Vec xp = x, xm = x;
      xp[k] += kFdStep;
      xm[k] -= kFdStep;
      jac.col(k) = (f(xp) - f(xm)) / (2.0 * kFdStep);
    }
    Vec step = jac.colPivHouseholderQr().solve(target - fx);
    double damp = 1.0;
    bool improved = false;
    for (int half = 0; half < 30 && !improved; ++half) {
      Vec cand = x + damp * step;
      double cres = (f(cand) - target).cwiseAbs().maxCoeff();
      if (cres < res) {
        x = cand;
        res = cres;
        improved = true;
      }
      damp *= 0.5;
    }
    if (!improved) break;  // stalled; report the residual below
  }
  if (res <= kNewtonTol) return x;
  throw ConvergenceError(std::string(what) + ": Newton did not converge", res);
}

}  // namespace

HGroup::HGroup(std::shared_ptr<const LieSplitSpec> spec, ChartKind chart)
    : spec_(std::move(spec)), chart_(chart) {
  const int d = spec_->dim();
  const int r = spec_->r_dim;
  ad_n_.reserve(r);
  for (int k = 0; k < r; ++k) {
    Vec ak = Vec::Zero(d);
    ak[spec_->n_dim + k] = 1.0;
    ad_n_.push_back(ad_matrix(*spec_, ak, Subspace::N));
  }
  h_abelian_ = true;
  for (int i = spec_->n_dim; i < d && h_abelian_; ++i)
    for (int j = spec_->n_dim; j < d && h_abelian_; ++j)
      for (int k = 0; k < d; ++k)
        if (spec_->bracket_coeff(i, j, k) != 0.0) {
          h_abelian_ = false;
          break;
        }
  if (static_cast<int>(spec_->matrix_realization.size()) == d) {
    for (int k = 0; k < r; ++k) h_mats_.push_back(spec_->matrix_realization[spec_->n_dim + k]);
    for (int k = 0; k < spec_->n_dim; ++k) n_mats_.push_back(spec_->matrix_realization[k]);
    const int sz = static_cast<int>(n_mats_[0].size());
    Mat span(sz, spec_->n_dim);
    for (int k = 0; k < spec_->n_dim; ++k)
      span.col(k) = Eigen::Map<const Vec>(n_mats_[k].data(), sz);
    n_span_.compute(span);
    n_span_ready_ = true;
  }
}

void HGroup::set_custom_chart(std::function<Mat(const Vec&)> to_matrix,
                              std::function<Vec(const Mat&)> to_coords) {
  chart_ = ChartKind::Custom;
  to_matrix_ = std::move(to_matrix);
  to_coords_ = std::move(to_coords);
}

void HGroup::set_haar_closed_form(std::function<double(const Vec&)> rho) {
  haar_closed_ = std::move(rho);
}

bool HGroup::has_matrix_chart() const {
  return to_matrix_ != nullptr || !h_mats_.empty();
}

bool HGroup::log_like_chart() const {
  if (chart_ == ChartKind::Log) return true;
  return chart_ == ChartKind::SecondKind && (h_abelian_ || r() <= 1);
}

Mat HGroup::point_matrix(const GroupPointH& a) const {
  if (to_matrix_) return to_matrix_(a.coords);
  if (h_mats_.empty()) throw UnsupportedError("point_matrix: no matrix realization");
  const int sz = static_cast<int>(h_mats_[0].rows());
  if (chart_ == ChartKind::Log) {
    Mat z = Mat::Zero(sz, sz);
    for (int k = 0; k < r(); ++k) z += a.coords[k] * h_mats_[k];
    return mat_exp(z);
  }
  Mat m = Mat::Identity(sz, sz);
  for (int k = 0; k < r(); ++k) m *= mat_exp(a.coords[k] * h_mats_[k]);
  return m;
}

Vec HGroup::coords_from_matrix(const Mat& m, const Vec& start) const {
  if (to_coords_) return to_coords_(m);
  const int sz = static_cast<int>(m.rows());
  auto flatten = [sz](const Mat& mm) { return Vec(Eigen::Map<const Vec>(mm.data(), sz * sz)); };
  auto f = [&](const Vec& a) { return flatten(point_matrix(GroupPointH(a))); };
  return newton_solve(f, flatten(m), start, "coords_from_matrix");
}

Vec HGroup::bch_h(const Vec& x, const Vec& y) const {
  const int step = spec_->nilpotency_step_h.value_or(h_abelian_ ? 1 : 0);
  if (step < 1)
    throw UnsupportedError("bch_h: h is not declared nilpotent and no realization is present");
  if (step > 4) throw UnsupportedError("bch_h: nilpotency step > 4 not implemented");
  const Vec xf = embed_h(*spec_, x), yf = embed_h(*spec_, y);
  Vec z = xf + yf;
  if (step >= 2) {
    Vec xy = bracket(*spec_, xf, yf);
    z += 0.5 * xy;
    if (step >= 3) {
      Vec xxy = bracket(*spec_, xf, xy);
      Vec yxy = bracket(*spec_, yf, xy);
      z += (1.0 / 12.0) * xxy - (1.0 / 12.0) * yxy;
      if (step >= 4) z -= (1.0 / 24.0) * bracket(*spec_, yf, xxy);
    }
  }
  return z.tail(spec_->r_dim);
}

Vec HGroup::second_kind_to_log(const Vec& a) const {
  Vec z = Vec::Zero(r());
  for (int k = r() - 1; k >= 0; --k) {
    Vec ek = Vec::Zero(r());
    ek[k] = a[k];
    z = bch_h(ek, z);
  }
  return z;
}

Vec HGroup::log_to_second_kind(const Vec& z) const {
  auto f = [&](const Vec& a) { return second_kind_to_log(a); };
  return newton_solve(f, z, Vec::Zero(r()), "log_to_second_kind");
}

GroupPointH HGroup::product(const GroupPointH& a, const GroupPointH& b) const {
  if (a.dim() != r() || b.dim() != r()) throw DimensionError("product: dimension mismatch");
  if (h_abelian_ && chart_ != ChartKind::Custom) return GroupPointH(a.coords + b.coords);
  if (has_matrix_chart()) {
    Mat m = point_matrix(a) * point_matrix(b);
    return GroupPointH(coords_from_matrix(m, a.coords + b.coords));
  }
  if (spec_->nilpotency_step_h.has_value()) {
    Vec z = bch_h(second_kind_to_log(a.coords), second_kind_to_log(b.coords));
    if (chart_ == ChartKind::Log) return GroupPointH(z);
    return GroupPointH(log_to_second_kind(z));
  }
  throw UnsupportedError(
      "product: need a nilpotent h (declared step) or a matrix realization");
}

GroupPointH HGroup::inverse(const GroupPointH& a) const {
  if (h_abelian_ && chart_ != ChartKind::Custom) return GroupPointH(-a.coords);
  if (has_matrix_chart()) {
    Mat m = point_matrix(a).inverse();
    return GroupPointH(coords_from_matrix(m, -a.coords));
  }
  if (spec_->nilpotency_step_h.has_value()) {
    Vec z = -second_kind_to_log(a.coords);
    if (chart_ == ChartKind::Log) return GroupPointH(z);
    return GroupPointH(log_to_second_kind(z));
  }
  throw UnsupportedError("inverse: need a nilpotent h or a matrix realization");
}

double HGroup::haar_density(const Vec& x) const {
  if (haar_closed_) return haar_closed_(x);
  // Lebesgue measure is the left Haar measure in additive coordinates
  if (h_abelian_ && chart_ != ChartKind::Custom) return 1.0;
  return haar_density_numeric(x);
}

double HGroup::haar_density_numeric(const Vec& x) const {
  if (r() == 0) return 1.0;
  Mat jac(r(), r());
  GroupPointH px(x);
  for (int k = 0; k < r(); ++k) {
    Vec yp = Vec::Zero(r()), ym = Vec::Zero(r());
    yp[k] = kFdStep;
    ym[k] = -kFdStep;
    jac.col(k) =
        (product(px, GroupPointH(yp)).coords - product(px, GroupPointH(ym)).coords) / (2.0 * kFdStep);
  }
  double det = std::abs(jac.determinant());
  if (det < 1e-12) throw ChartDegeneracyError("haar_density: singular product differential");
  return 1.0 / det;
}

Mat HGroup::coadjoint_transpose(const GroupPointH& h) const {
  const int nd = spec_->n_dim;
  if (chart_ == ChartKind::SecondKind) {
    // Ad(h^{-1})|_n = exp(-a_r ad A_r) ... exp(-a_1 ad A_1)
    Mat m = Mat::Identity(nd, nd);
    for (int k = 0; k < r(); ++k) m = mat_exp(-h.coords[k] * ad_n_[k]) * m;
    return m.transpose();
  }
  if (chart_ == ChartKind::Log) {
    Mat z = Mat::Zero(nd, nd);
    for (int k = 0; k < r(); ++k) z += h.coords[k] * ad_n_[k];
    return mat_exp(-z).transpose();
  }
  // custom chart: conjugate the n-basis by the realization matrix
  if (!n_span_ready_) throw UnsupportedError("coadjoint_transpose: custom chart needs a realization");
  Mat hm = point_matrix(h);
  Mat hmi = hm.inverse();
  const int sz = static_cast<int>(hm.rows());
  Mat ad(nd, nd);
  for (int j = 0; j < nd; ++j) {
    Mat conj = hmi * n_mats_[j] * hm;
    Vec coeff = n_span_.solve(Eigen::Map<const Vec>(conj.data(), sz * sz));
    ad.col(j) = coeff;
  }
  return ad.transpose();
}

Mat HGroup::adjoint_on_n(const GroupPointH& h) const {
  return coadjoint_transpose(inverse(h)).transpose();
}

Mat HGroup::ad_on_h(const Vec& a) const {
  return ad_matrix(*spec_, embed_h(*spec_, a), Subspace::H);
}

GroupElementG g_product(const HGroup& group, const GroupElementG& a, const GroupElementG& b) {
  // (exp x, h)(exp y, k) = (exp x * exp(Ad(h) y), h k)
  Vec ady = group.adjoint_on_n(a.h) * b.n_coords;
  const LieSplitSpec& spec = group.spec();
  Vec xn;
  bool n_abelian = true;
  for (int i = 0; i < spec.n_dim && n_abelian; ++i)
    for (int j = 0; j < spec.n_dim && n_abelian; ++j)
      for (int k = 0; k < spec.dim(); ++k)
        if (spec.bracket_coeff(i, j, k) != 0.0) {
          n_abelian = false;
          break;
        }
  if (n_abelian) {
    xn = a.n_coords + ady;
  } else {
    const int step = spec.nilpotency_step_n.value_or(0);
    if (step < 1 || step > 4)
      throw UnsupportedError("g_product: n must be abelian or nilpotent with step <= 4");
    Vec xf = embed_n(spec, a.n_coords), yf = embed_n(spec, ady);
    Vec z = xf + yf;
    Vec xy = bracket(spec, xf, yf);
    if (step >= 2) z += 0.5 * xy;
    if (step >= 3)
      z += (1.0 / 12.0) * bracket(spec, xf, xy) - (1.0 / 12.0) * bracket(spec, yf, xy);
    if (step >= 4) z -= (1.0 / 24.0) * bracket(spec, yf, bracket(spec, xf, xy));
    xn = z.head(spec.n_dim);
  }
  return {xn, group.product(a.h, b.h)};
}

GroupElementG g_inverse(const HGroup& group, const GroupElementG& a) {
  GroupPointH hi = group.inverse(a.h);
  Vec x = -(group.adjoint_on_n(hi) * a.n_coords);
  return {x, hi};
}

}  // namespace lieframe
