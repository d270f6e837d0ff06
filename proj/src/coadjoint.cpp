#include "lieframe/coadjoint.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace lieframe {

namespace {
constexpr double kFdStep = 1e-6;
constexpr double kDomainPad = 1e-9;
}  // namespace

Vec beta_eval(const HGroup& group, const Vec& lambda, const GroupPointH& h) {
  if (lambda.size() != group.n()) throw DimensionError("beta_eval: lambda has wrong size");
  return group.coadjoint_transpose(h) * lambda;
}

Mat coadjoint_jacobian(const LieSplitSpec& spec, const Vec& omega) {
  if (omega.size() != spec.n_dim) throw DimensionError("coadjoint_jacobian: omega has wrong size");
  Mat d(spec.n_dim, spec.r_dim);
  for (int j = 0; j < spec.n_dim; ++j)
    for (int k = 0; k < spec.r_dim; ++k) {
      double v = 0.0;
      for (int m = 0; m < spec.n_dim; ++m)
        v += omega[m] * spec.bracket_coeff(j, spec.n_dim + k, m);
      d(j, k) = v;
    }
  return d;
}

ImmersionReport immersion_check(const LieSplitSpec& spec, const Vec& omega) {
  ImmersionReport report;
  report.D = coadjoint_jacobian(spec, omega);
  const int r = spec.r_dim;
  if (r == 0) {  // vacuous immersion
    report.gram_det = 1.0;
    report.threshold = 0.0;
    report.condition_number = 1.0;
    report.passed = true;
    return report;
  }
  Mat gram = report.D.transpose() * report.D;
  report.gram_det = gram.determinant();
  double fro = report.D.norm();
  report.threshold = 1e-10 * std::pow(fro, 2 * r);
  Eigen::JacobiSVD<Mat> svd(report.D);
  double smin = svd.singularValues().minCoeff();
  double smax = svd.singularValues().maxCoeff();
  report.condition_number = smin > 0 ? smax / smin : std::numeric_limits<double>::infinity();
  report.passed = report.gram_det > report.threshold;
  if (report.passed) report.J = select_index_set_J(report.D);
  return report;
}

std::vector<int> select_index_set_J(const Mat& D) {
  const int n = static_cast<int>(D.rows());
  const int r = static_cast<int>(D.cols());
  // Column-pivoted elimination on D^T: each step picks the unused row of D
  // whose eliminated residual is largest, ties broken by smallest index.
  Mat work = D;  // rows get orthogonalized against chosen pivots
  std::vector<int> chosen;
  std::vector<bool> used(n, false);
  for (int step = 0; step < r; ++step) {
    int best = -1;
    double best_norm = 0.0;
    for (int i = 0; i < n; ++i) {
      if (used[i]) continue;
      double norm = work.row(i).norm();
      if (norm > best_norm + 1e-15) {
        best_norm = norm;
        best = i;
      }
    }
    if (best < 0 || best_norm < 1e-12)
      throw UnsupportedError("select_index_set_J: no invertible row submatrix (rank-deficient D)");
    used[best] = true;
    chosen.push_back(best);
    Vec pivot = work.row(best).transpose() / best_norm;
    for (int i = 0; i < n; ++i) {
      if (used[i]) continue;
      work.row(i) -= (work.row(i) * pivot) * pivot.transpose();
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

ThetaChart::ThetaChart(std::shared_ptr<const HGroup> group, Vec lambda, std::vector<int> J,
                       Vec box_radii)
    : group_(std::move(group)), lambda_(std::move(lambda)), J_(std::move(J)) {
  if (static_cast<int>(J_.size()) != group_->r())
    throw DimensionError("ThetaChart: |J| must equal dim h");
  domain_ = Box::centered(box_radii);
}

Vec ThetaChart::theta_unchecked(const Vec& t) const {
  Vec beta = beta_eval(*group_, lambda_, GroupPointH(t));
  Vec out(static_cast<int>(J_.size()));
  for (std::size_t k = 0; k < J_.size(); ++k) out[static_cast<int>(k)] = beta[J_[k]];
  return out;
}

Vec ThetaChart::theta(const Vec& t) const {
  if (!domain_.contains(t, kDomainPad + 1e-9 * domain_.radii().maxCoeff()))
    throw ChartDomainError("theta: point outside the validated neighborhood O");
  return theta_unchecked(t);
}

Mat ThetaChart::theta_jacobian(const Vec& t) const {
  const int r = this->r();
  Mat jac(r, r);
  for (int k = 0; k < r; ++k) {
    Vec tp = t, tm = t;
    tp[k] += kFdStep;
    tm[k] -= kFdStep;
    jac.col(k) = (theta_unchecked(tp) - theta_unchecked(tm)) / (2.0 * kFdStep);
  }
  return jac;
}

Vec ThetaChart::theta_inverse(const Vec& xi) const {
  const int r = this->r();
  if (xi.size() != r) throw DimensionError("theta_inverse: wrong target size");
  Vec t = Vec::Zero(r);
  double res = (theta_unchecked(t) - xi).cwiseAbs().maxCoeff();
  for (int it = 0; it < 50 && res > 1e-12; ++it) {
    Mat jac = theta_jacobian(t);
    Vec step = jac.colPivHouseholderQr().solve(xi - theta_unchecked(t));
    double damp = 1.0;
    bool improved = false;
    for (int half = 0; half < 40 && !improved; ++half) {
      Vec cand = t + damp * step;
      double cres = (theta_unchecked(cand) - xi).cwiseAbs().maxCoeff();
      if (cres < res) {
        t = cand;
        res = cres;
        improved = true;
      }
      damp *= 0.5;
    }
    if (!improved) break;
  }
  if (res > 1e-10)
    throw ConvergenceError("theta_inverse: Newton residual above tolerance", res);
  if (!domain_.contains(t, 1e-7 + 1e-7 * domain_.radii().maxCoeff()))
    throw ChartDomainError("theta_inverse: converged outside the neighborhood O");
  return t;
}

double ThetaChart::weight_at_point(const Vec& t) const {
  double det = std::abs(theta_jacobian(t).determinant());
  if (det < 1e-12) throw ChartDegeneracyError("weight_at_point: singular chart Jacobian");
  return group_->haar_density(t) / det;
}

double ThetaChart::weight(const Vec& xi, WeightMethod method) const {
  Vec t = theta_inverse(xi);
  double det = std::abs(theta_jacobian(t).determinant());
  if (det < 1e-12) throw ChartDegeneracyError("weight: singular chart Jacobian at xi");
  const double inv_jac = 1.0 / det;  // |det Jac_{Theta^{-1}}(xi)|
  if (method == WeightMethod::Pushforward) return group_->haar_density(t) * inv_jac;

  if (!group_->log_like_chart())
    throw UnsupportedError(
        "weight: eigenvalue method requires a log-like chart on exponential H");
  Mat neg_ad = -group_->ad_on_h(t);
  Eigen::EigenSolver<Mat> eig(neg_ad);
  std::complex<double> prod = 1.0;
  for (int k = 0; k < neg_ad.rows(); ++k) {
    std::complex<double> w = eig.eigenvalues()[k];
    std::complex<double> v;
    if (std::abs(w) < 1e-8) {
      v = 1.0 + w / 2.0 + w * w / 6.0;
    } else {
      v = (std::exp(w) - 1.0) / w;
    }
    prod *= v;
  }
  return std::abs(prod) * inv_jac;
}

ThetaChart select_neighborhood_O(std::shared_ptr<const HGroup> group, const Vec& lambda,
                                 const std::vector<int>& J, const Vec& initial_radii,
                                 int grid_per_axis) {
  const int r = group->r();
  if (r == 0) throw UnsupportedError("select_neighborhood_O: trivial H has no chart to build");
  Vec radii = initial_radii;
  ThetaChart probe(group, lambda, J, radii);
  const double scale0 = [&] {
    Eigen::JacobiSVD<Mat> svd(probe.theta_jacobian(Vec::Zero(r)));
    return svd.singularValues().minCoeff();
  }();

  int halvings = 0;
  while (true) {
    if (radii.maxCoeff() < 1e-6)
      throw UnsupportedError("select_neighborhood_O: radius underflow without a valid neighborhood");
    ThetaChart chart(group, lambda, J, radii);
    // validation grid
    std::vector<Vec> pts;
    std::vector<Vec> images;
    const int g = grid_per_axis;
    std::size_t total = 1;
    for (int k = 0; k < r; ++k) total *= g;
    pts.reserve(total);
    bool ok = true;
    double min_sv = std::numeric_limits<double>::infinity();
    double max_norm = 0.0;
    for (std::size_t flat = 0; flat < total && ok; ++flat) {
      std::size_t rem = flat;
      Vec t(r);
      for (int k = 0; k < r; ++k) {
        int ik = static_cast<int>(rem % g);
        rem /= g;
        t[k] = -radii[k] + 2.0 * radii[k] * ik / (g - 1);
      }
      Vec img = chart.theta_unchecked(t);
      if (!img.allFinite()) {
        ok = false;
        break;
      }
      Eigen::JacobiSVD<Mat> svd(chart.theta_jacobian(t));
      min_sv = std::min(min_sv, svd.singularValues().minCoeff());
      max_norm = std::max(max_norm, img.cwiseAbs().maxCoeff());
      pts.push_back(t);
      images.push_back(img);
    }
    if (ok && min_sv < 1e-6 * scale0) ok = false;
    if (ok) {
      // injectivity proxy: distinct grid points must have distinct images
      double grid_step = (2.0 * radii / (g - 1)).maxCoeff();
      for (std::size_t i = 0; i < pts.size() && ok; ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
          if ((pts[i] - pts[j]).cwiseAbs().maxCoeff() <= grid_step * 1.0001) continue;
          if ((images[i] - images[j]).cwiseAbs().maxCoeff() < 1e-9) {
            ok = false;
            break;
          }
        }
    }
    if (ok) {
      chart.mutable_diagnostics() = {min_sv, scale0, max_norm, g, halvings};
      return chart;
    }
    radii *= 0.5;
    ++halvings;
  }
}

}  // namespace lieframe
