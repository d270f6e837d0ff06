// Acceptance suite: end-to-end checks of the numerical pipeline against
// closed forms and the frame/Parseval/ONB constructions, one criterion per
// run with a pass/fail line each.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "lieframe/catalog.hpp"
#include "lieframe/frame_analysis.hpp"
#include "lieframe/quadrature.hpp"
#include "lieframe/specfile.hpp"

using namespace lieframe;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = 3.14159265358979323846;

int failures = 0;

void report(int criterion, bool ok, const std::string& what, const std::string& detail) {
  std::printf("criterion %2d: %s  %s (%s)\n", criterion, ok ? "PASS" : "FAIL", what.c_str(),
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

// ---------------------------------------------------------------- criterion 1
void criterion_jacobian_oracle() {
  double worst = 0.0;
  const double h = 1e-6;
  for (const auto& id : catalog_ids()) {
    auto entry = get_entry(id);
    Mat d = coadjoint_jacobian(*entry.spec, entry.lambda);
    for (int k = 0; k < entry.spec->r_dim; ++k) {
      Vec tp = Vec::Zero(entry.spec->r_dim), tm = tp;
      tp[k] = h;
      tm[k] = -h;
      Vec col = (beta_eval(*entry.group, entry.lambda, GroupPointH(tp)) -
                 beta_eval(*entry.group, entry.lambda, GroupPointH(tm))) /
                (2 * h);
      worst = std::max(worst, (col - d.col(k)).cwiseAbs().maxCoeff());
    }
  }
  report(1, worst < 1e-6, "structure-constant Jacobian vs finite differences, 7 entries",
         "max entry error " + fmt(worst));
}

// ---------------------------------------------------------------- criterion 2
void criterion_weight_closed_forms() {
  bool ok = true;
  std::string detail;
  {  // rotation+dilation: W = 1/sqrt(1-xi^2) on (-0.7, 0.7), rtol 1e-8
    auto entry = get_entry("solv_oscillator");
    auto chart = make_entry_chart(entry);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      double xi = -0.7 + 1.4 * (i + 0.5) / 100.0;
      double w = chart->weight(Vec::Constant(1, xi));
      double closed = 1.0 / std::sqrt(1.0 - xi * xi);
      worst = std::max(worst, std::abs(w - closed) / closed);
    }
    ok = ok && worst < 1e-8;
    detail += "rot+dil " + fmt(worst);
  }
  {  // shearlet: W = xi_1^{-2}, rtol 1e-8
    auto entry = get_entry("toeplitz_shearlet");
    auto chart = make_entry_chart(entry);
    Rng rng(21);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      Vec t = (Vec(2) << rng.uniform(-0.8, 0.8), rng.uniform(-0.8, 0.8)).finished();
      Vec xi = chart->theta(t);
      double w = chart->weight(xi);
      double closed = 1.0 / (xi[0] * xi[0]);
      worst = std::max(worst, std::abs(w - closed) / closed);
    }
    ok = ok && worst < 1e-8;
    detail += ", shearlet " + fmt(worst);
  }
  {  // SL(2,R): W = 1/(|xi3| (xi2^2+xi3^2)^2) near the base point, rtol 1e-6
    auto entry = get_entry("sl2_embed");
    auto chart = make_entry_chart(entry);
    Rng rng(22);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      Vec t = (Vec(3) << rng.uniform(-0.2, 0.2), rng.uniform(-0.2, 0.2), rng.uniform(-0.2, 0.2))
                  .finished();
      Vec xi = chart->theta(t);
      double w = chart->weight(xi);
      double nsq = xi[1] * xi[1] + xi[2] * xi[2];
      double closed = 1.0 / (std::abs(xi[2]) * nsq * nsq);
      worst = std::max(worst, std::abs(w - closed) / closed);
    }
    ok = ok && worst < 1e-6;
    detail += ", sl2 " + fmt(worst);
  }
  {  // step-three group: W = 1 within 1e-10
    auto entry = get_entry("onb_step3");
    auto chart = make_entry_chart(entry);
    Rng rng(23);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      Vec t = (Vec(2) << rng.uniform(-0.45, 0.45), rng.uniform(-0.45, 0.45)).finished();
      double w = chart->weight(chart->theta(t));
      worst = std::max(worst, std::abs(w - 1.0));
    }
    ok = ok && worst < 1e-10;
    detail += ", step3 " + fmt(worst);
  }
  report(2, ok, "closed-form weights W", detail);
}

// ---------------------------------------------------------------- criterion 3
void criterion_chart_inversion() {
  double worst = 0.0;
  for (const auto& id : catalog_ids()) {
    auto entry = get_entry(id);
    auto chart = make_entry_chart(entry);
    Rng rng(31);
    const int r = entry.spec->r_dim;
    for (int i = 0; i < 100; ++i) {
      Vec t(r);
      for (int k = 0; k < r; ++k)
        t[k] = rng.uniform(0.9 * chart->domain().lo[k], 0.9 * chart->domain().hi[k]);
      Vec xi = chart->theta(t);
      Vec back = chart->theta_inverse(xi);
      worst = std::max(worst, (chart->theta(back) - xi).cwiseAbs().maxCoeff());
    }
  }
  double arcsin_worst = 0.0;
  {
    auto entry = get_entry("solv_oscillator");
    auto chart = make_entry_chart(entry);
    Rng rng(32);
    for (int i = 0; i < 100; ++i) {
      double xi = rng.uniform(-0.7, 0.7);
      Vec t = chart->theta_inverse(Vec::Constant(1, xi));
      arcsin_worst = std::max(arcsin_worst, std::abs(t[0] + std::asin(xi)));
    }
  }
  report(3, worst <= 1e-10 && arcsin_worst <= 1e-10,
         "chart inversion round trips, 100 points per entry",
         "round trip " + fmt(worst) + ", arcsin " + fmt(arcsin_worst));
}

// ---------------------------------------------------------------- criterion 4
void criterion_partition_of_unity() {
  Rng rng(41);
  double worst = 0.0;
  for (int n : {1, 2, 3, 4})
    for (double eps : {0.5, 1.0, 2.0}) {
      PartitionWindow1d w = partition_window_1d(eps, n);
      for (int i = 0; i < 10000; ++i) {
        double t = rng.uniform(-4.0 / eps, 4.0 / eps);
        int reach = static_cast<int>(std::ceil((std::abs(t) + w.support_radius) / w.step)) + 1;
        double sum = 0.0;
        for (int k = -reach; k <= reach; ++k) {
          double v = w.eval(t + w.step * k);
          sum += v * v;
        }
        worst = std::max(worst, std::abs(sum - 1.0));
      }
    }
  report(4, worst < 1e-10, "partition of unity, n in {1..4}, eps in {0.5,1,2}, 1e4 points each",
         "max residual " + fmt(worst));
}

// ---------------------------------------------------------------- criterion 5
void criterion_lattice_orthonormality() {
  double worst = 0.0;
  {  // rotation+dilation: cube C = [-s, s) with s = sqrt(2)/2, spacing 1/sqrt(2)
    const double varsigma = std::sqrt(2.0) / 2.0;
    const double volume = 2.0 * varsigma;
    LatticeGammaN lattice;
    lattice.spacing = Vec::Constant(1, 1.0 / (2.0 * varsigma));
    Box c{Vec::Constant(1, -varsigma), Vec::Constant(1, varsigma)};
    auto indices = lattice.enumerate(12);  // 25 exponentials
    for (std::size_t a = 0; a < indices.size(); ++a)
      for (std::size_t b = a; b < indices.size(); ++b) {
        double dy = lattice.frequency(indices[a])[0] - lattice.frequency(indices[b])[0];
        auto f = [&](const Vec& xi) {
          double phase = 2.0 * kPi * xi[0] * dy;
          return Cplx(std::cos(phase), std::sin(phase)) / volume;
        };
        Cplx gram = integrate_box_complex(f, c, {}, 96);
        worst = std::max(worst, std::abs(gram - Cplx(a == b ? 1.0 : 0.0)));
      }
  }
  {  // step-three group: C = Theta([-1/2,1/2)^2), integer lattice, unit volume
    auto entry = get_entry("onb_step3");
    auto chart = make_entry_chart(entry);
    LatticeGammaN lattice;
    lattice.spacing = Vec::Constant(2, 1.0);
    Box cell{Vec::Constant(2, -0.5), Vec::Constant(2, 0.5)};
    auto indices = lattice.enumerate(2);  // 25 exponentials
    for (std::size_t a = 0; a < indices.size(); ++a)
      for (std::size_t b = a; b < indices.size(); ++b) {
        Vec dy = lattice.frequency(indices[a]) - lattice.frequency(indices[b]);
        // pull the integral over C back to the chart cell; det Jac Theta = 1
        auto f = [&](const Vec& t) {
          Vec xi = chart->theta_unchecked(t);
          double phase = 2.0 * kPi * xi.dot(dy);
          return Cplx(std::cos(phase), std::sin(phase));
        };
        Cplx gram = integrate_box_complex(f, cell, {}, 48);
        worst = std::max(worst, std::abs(gram - Cplx(a == b ? 1.0 : 0.0)));
      }
  }
  report(5, worst < 1e-10, "orthonormality of the first 25 frequency-box exponentials",
         "max gram deviation " + fmt(worst));
}

// ---------------------------------------------------------------- criterion 6
void criterion_parseval_reproduction() {
  auto entry = get_entry("axb");
  auto chart = make_entry_chart(entry);
  const int n = 2;
  const double eps = (n + 1) / (static_cast<double>(n) * 0.995);
  auto [s, steps] = product_window_solvable(*entry.group, {partition_window_1d(eps, n)});
  auto [box, lattice] = compute_frequency_box(*chart);
  CoverGammaH cover = build_tiling_cover(*entry.group, chart->domain().radii(), steps,
                                         Vec::Constant(1, 4.0));
  Window f = parseval_window(chart, s, box.volume);
  Rng rng(2026);
  double worst_ratio = 0.0, worst_tail = 0.0;
  for (int i = 0; i < 5; ++i) {
    Window g = random_bump_combination(rng, Box::centered(Vec::Constant(1, 0.9)));
    FrameSumResult sum = frame_sum(*chart, g, f, cover, lattice);
    double ratio = sum.value / window_norm_sq(*chart, g);
    worst_ratio = std::max(worst_ratio, std::abs(ratio - 1.0));
    worst_tail = std::max(worst_tail, sum.tail_increment);
  }
  report(6, worst_ratio < 2e-3 && worst_tail < 1e-4,
         "Parseval reproduction on ax+b with the spline window, 5 seeded bumps",
         "|ratio-1| " + fmt(worst_ratio) + ", tail " + fmt(worst_tail));
}

// ---------------------------------------------------------------- criterion 7
void criterion_onb_reproduction() {
  bool ok = true;
  std::string detail;
  {  // step-three group, indicator of the unit cell, integer lattices
    auto entry = get_entry("onb_step3");
    auto chart = make_entry_chart(entry);
    Window f = indicator_window(chart);
    LatticeGammaN lattice;
    lattice.spacing = *entry.plan->gamma_n_spacing;
    std::vector<GroupPointH> ells;
    for (int a = -1; a <= 1; ++a)
      for (int b = -1; b <= 1; ++b) ells.emplace_back((Vec(2) << a, b).finished());
    std::vector<std::vector<int>> kappas = lattice.enumerate(2);
    double gram = verify_onb_gram_residual(*chart, f, ells, kappas, lattice);
    CoverGammaH cover = build_tiling_cover(*entry.group, chart->domain().radii(),
                                           *entry.plan->gamma_h_step, Vec::Constant(2, 3.0));
    Rng rng(71);
    double worst_ratio = 0.0;
    for (int i = 0; i < 5; ++i) {
      Window g = random_bump_combination(rng, Box::centered(Vec::Constant(2, 0.44)));
      FrameSumResult sum = frame_sum(*chart, g, f, cover, lattice);
      double ratio = sum.value / window_norm_sq(*chart, g);
      worst_ratio = std::max(worst_ratio, std::abs(ratio - 1.0));
    }
    ok = ok && gram < 1e-6 && worst_ratio < 2e-3;
    detail += "step3 gram " + fmt(gram) + " ratio " + fmt(worst_ratio);
  }
  {  // free two-step reduced system: unit interval window, integer lattices
    auto entry = get_entry("free_nilpotent_step2");
    auto chart = make_entry_chart(entry);
    Window f;
    f.kind = Window::Kind::Indicator;
    f.support = Box{Vec::Constant(1, 0.0), Vec::Constant(1, 1.0)};
    f.breakpoints = {{}};
    f.eval = [](const Vec&) { return 1.0; };
    LatticeGammaN lattice;
    lattice.spacing = *entry.plan->gamma_n_spacing;
    std::vector<GroupPointH> ells;
    for (int a = -1; a <= 1; ++a) ells.emplace_back(Vec::Constant(1, static_cast<double>(a)));
    std::vector<std::vector<int>> kappas = lattice.enumerate(2);
    double gram = verify_onb_gram_residual(*chart, f, ells, kappas, lattice);
    CoverGammaH cover = build_tiling_cover(*entry.group, Vec::Constant(1, 0.5),
                                           *entry.plan->gamma_h_step, Vec::Constant(1, 3.0));
    Rng rng(72);
    double worst_ratio = 0.0;
    for (int i = 0; i < 5; ++i) {
      Window g = random_bump_combination(rng, Box{Vec::Constant(1, 0.06), Vec::Constant(1, 0.94)});
      FrameSumResult sum = frame_sum(*chart, g, f, cover, lattice);
      double ratio = sum.value / window_norm_sq(*chart, g);
      worst_ratio = std::max(worst_ratio, std::abs(ratio - 1.0));
    }
    ok = ok && gram < 1e-6 && worst_ratio < 2e-3;
    detail += "; free-nilpotent gram " + fmt(gram) + " ratio " + fmt(worst_ratio);
  }
  report(7, ok, "orthonormal basis reproduction (gram patches and Parseval ratios)", detail);
}

// ---------------------------------------------------------------- criterion 8
void criterion_frame_bounds() {
  auto entry = get_entry("solv_oscillator");
  // the window sqrt(1 - sin^2 t) b_1(t)^{1/2} is supported on (-1, 1), so the
  // chart neighborhood is widened accordingly; the frequency data stays the
  // quoted C = (-sqrt2/2, sqrt2/2) with the 1/sqrt2 lattice
  auto chart = make_entry_chart(entry, Vec::Constant(1, 1.02));
  Window f;
  f.kind = Window::Kind::Custom;
  f.support = Box::centered(Vec::Constant(1, 1.0));
  f.breakpoints = {{0.0}};
  f.eval = [](const Vec& t) {
    double b = bspline(1, t[0]);
    return b > 0.0 ? std::cos(t[0]) * std::sqrt(b) : 0.0;
  };
  const double c_volume = std::sqrt(2.0);
  LatticeGammaN lattice;
  lattice.spacing = Vec::Constant(1, 1.0 / std::sqrt(2.0));
  CoverGammaH cover = build_tiling_cover(*entry.group, Vec::Constant(1, 1.0),
                                         Vec::Constant(1, 1.0), Vec::Constant(1, 4.0));
  Box cell{Vec::Constant(1, -0.5), Vec::Constant(1, 0.5)};
  BoundsResult bounds = estimate_frame_bounds(*chart, f, cover, c_volume, cell);
  const double A = bounds.m_hat * std::sqrt(2.0);
  const double B = bounds.M_hat * std::sqrt(2.0);
  Rng rng(81);
  bool sandwich = bounds.m_hat > 0.0;
  double lo_margin = 1e9, hi_margin = 1e9;
  for (int i = 0; i < 5; ++i) {
    Window g = random_bump_combination(rng, Box::centered(Vec::Constant(1, 0.9)));
    FrameSumResult sum = frame_sum(*chart, g, f, cover, lattice);
    double ratio = sum.value / window_norm_sq(*chart, g);
    sandwich = sandwich && ratio >= A * (1 - 2e-3) && ratio <= B * (1 + 2e-3);
    lo_margin = std::min(lo_margin, ratio - A);
    hi_margin = std::min(hi_margin, B - ratio);
  }
  report(8, sandwich, "frame bounds A = m sqrt2 <= ratio <= B = M sqrt2 on the quoted window",
         "m " + fmt(bounds.m_hat) + ", margins " + fmt(lo_margin) + "/" + fmt(hi_margin));
}

// ---------------------------------------------------------------- criterion 9
void criterion_tonelli_oracle() {
  double worst = 0.0;
  {
    auto entry = get_entry("axb");
    auto chart = make_entry_chart(entry);
    const double eps = 3.0 / (2.0 * 0.995);
    auto [s, steps] = product_window_solvable(*entry.group, {partition_window_1d(eps, 2)});
    auto [box, lattice] = compute_frequency_box(*chart);
    CoverGammaH cover = build_tiling_cover(*entry.group, chart->domain().radii(), steps,
                                           Vec::Constant(1, 4.0));
    Window f = parseval_window(chart, s, box.volume);
    Rng rng(91);
    for (int i = 0; i < 5; ++i) {
      Window g = random_bump_combination(rng, Box::centered(Vec::Constant(1, 0.9)));
      OracleResult oracle = oracle_identity_check(*chart, g, f, cover, lattice, box.volume);
      worst = std::max(worst, oracle.residual);
    }
  }
  {
    auto entry = get_entry("solv_oscillator");
    auto chart = make_entry_chart(entry);
    const double radius = chart->domain().hi[0];
    const double eps = 3.0 / (2.0 * radius * 0.995);
    auto [s, steps] = product_window_solvable(*entry.group, {partition_window_1d(eps, 2)});
    const double c_volume = std::sqrt(2.0);
    LatticeGammaN lattice;
    lattice.spacing = Vec::Constant(1, 1.0 / std::sqrt(2.0));
    CoverGammaH cover = build_tiling_cover(*entry.group, chart->domain().radii(), steps,
                                           Vec::Constant(1, 3.0));
    Window f = parseval_window(chart, s, c_volume);
    Rng rng(92);
    for (int i = 0; i < 5; ++i) {
      Window g = random_bump_combination(rng, Box::centered(Vec::Constant(1, 0.7)));
      OracleResult oracle = oracle_identity_check(*chart, g, f, cover, lattice, c_volume);
      worst = std::max(worst, oracle.residual);
    }
  }
  report(9, worst < 1e-3, "coefficient sums match |C| int |g|^2 F (two pipelines), 10 bumps",
         "max relative residual " + fmt(worst));
}

// --------------------------------------------------------------- criterion 10
void criterion_negative_controls() {
  LieSplitSpec abelian;
  abelian.n_dim = 2;
  abelian.r_dim = 1;
  abelian.allocate();
  abelian.h_solvable = true;
  abelian.nilpotency_step_h = 1;
  auto immersion = immersion_check(abelian, (Vec(2) << 1.0, 0.5).finished());
  bool det_zero = immersion.gram_det == 0.0 && !immersion.passed;

  auto entry = get_entry("axb");
  auto chart = make_entry_chart(entry);
  auto [s, steps] = product_window_solvable(*entry.group,
                                            {partition_window_1d(3.0 / (2.0 * 0.995), 2)});
  auto [box, lattice] = compute_frequency_box(*chart);
  Window f = parseval_window(chart, s, box.volume);
  Window gap = f;
  const Window inner = f;
  gap.eval = [inner](const Vec& t) { return std::abs(t[0]) < 0.3 ? 0.0 : inner(t); };
  gap.breakpoints = {{-0.3, 0.3}};
  // sparse cover: tiles spaced wider than the support leave the gap open
  CoverGammaH sparse = build_tiling_cover(*entry.group, chart->domain().radii(),
                                          Vec::Constant(1, 2.0 * f.support.hi[0]),
                                          Vec::Constant(1, 4.0));
  Box cell{Vec::Constant(1, -f.support.hi[0]), Vec::Constant(1, f.support.hi[0])};
  BoundsResult bounds = estimate_frame_bounds(*chart, gap, sparse, box.volume, cell);
  bool not_frame = !bounds.is_frame && bounds.m_hat == 0.0;

  report(10, det_zero && not_frame, "negative controls: abelian immersion, gapped window",
         std::string("det ") + fmt(immersion.gram_det) + ", m_hat " + fmt(bounds.m_hat));
}

// --------------------------------------------------------------- criterion 11
void criterion_determinism() {
#ifdef LIEFRAME_CLI_PATH
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  };
  fs::path dir1 = fs::temp_directory_path() / "lieframe_acc_det1";
  fs::path dir2 = fs::temp_directory_path() / "lieframe_acc_det2";
  fs::remove_all(dir1);
  fs::remove_all(dir2);
  std::string base = std::string(LIEFRAME_CLI_PATH) +
                     " verify --input axb --window parseval --seed 97 --out-dir ";
  int c1 = std::system((base + dir1.string() + " >/dev/null 2>&1").c_str());
  int c2 = std::system((base + dir2.string() + " >/dev/null 2>&1").c_str());
  bool ok = WEXITSTATUS(c1) == 0 && WEXITSTATUS(c2) == 0;
  std::string r1 = slurp(dir1 / "report.json");
  std::string r2 = slurp(dir2 / "report.json");
  ok = ok && !r1.empty() && r1 == r2;
  report(11, ok, "repeated verify with one seed produces byte-identical report.json",
         "bytes " + std::to_string(r1.size()));
#else
  report(11, false, "determinism", "CLI path not configured");
#endif
}

}  // namespace

int main() {
  criterion_jacobian_oracle();
  criterion_weight_closed_forms();
  criterion_chart_inversion();
  criterion_partition_of_unity();
  criterion_lattice_orthonormality();
  criterion_parseval_reproduction();
  criterion_onb_reproduction();
  criterion_frame_bounds();
  criterion_tonelli_oracle();
  criterion_negative_controls();
  criterion_determinism();
  std::printf("%s (%d/11 criteria passed)\n",
              failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED", 11 - failures);
  return failures == 0 ? 0 : 1;
}
