#include "lieframe/catalog.hpp"

#include <cmath>

namespace lieframe {

namespace {

Mat elementary(int size, int i, int j) {
  Mat m = Mat::Zero(size, size);
  m(i, j) = 1.0;
  return m;
}

CatalogEntry make_axb() {
  auto spec = std::make_shared<LieSplitSpec>();
  spec->name = "axb";
  spec->n_dim = 1;
  spec->r_dim = 1;
  spec->allocate();
  spec->set_bracket(1, 0, 0, 1.0);  // [A, X] = X
  spec->nilpotency_step_n = 1;
  spec->h_solvable = true;
  spec->h_exponential = true;
  spec->nilpotency_step_h = 1;
  Mat x(2, 2), a(2, 2);
  x << 0, 1, 0, 0;
  a << 1, 0, 0, 0;
  spec->matrix_realization = {x, a};

  CatalogEntry e;
  e.id = "axb";
  e.description = "affine ax+b group acting on R; modulation kernel exp(2 pi i e^{-t} x)";
  e.spec = spec;
  e.group = std::make_shared<HGroup>(spec);
  e.lambda = Vec::Constant(1, 1.0);
  e.default_o_radii = Vec::Constant(1, 1.0);
  e.index_set = {0};
  e.beta_closed = [](const Vec& t) { return Vec::Constant(1, std::exp(-t[0])).eval(); };
  e.theta_closed = [](const Vec& t) { return Vec::Constant(1, std::exp(-t[0])).eval(); };
  e.theta_inv_closed = [](const Vec& xi) { return Vec::Constant(1, -std::log(xi[0])).eval(); };
  e.weight_closed = [](const Vec& xi) { return 1.0 / xi[0]; };
  e.parseval_recipe = true;
  return e;
}

CatalogEntry make_heisenberg() {
  auto spec = std::make_shared<LieSplitSpec>();
  spec->name = "heisenberg";
  spec->n_dim = 2;
  spec->r_dim = 1;
  spec->allocate();
  spec->set_bracket(2, 1, 0, 1.0);  // [A, X2] = X1
  spec->nilpotency_step_n = 1;
  spec->nilpotency_step_h = 1;
  spec->h_solvable = true;
  spec->h_exponential = true;
  spec->matrix_realization = {elementary(3, 0, 2), elementary(3, 1, 2), elementary(3, 0, 1)};

  CatalogEntry e;
  e.id = "heisenberg";
  e.description = "Heisenberg group R^2 x| R; the Gabor case with modulations exp(-2 pi i t x)";
  e.spec = spec;
  e.group = std::make_shared<HGroup>(spec);
  e.lambda = (Vec(2) << 1.0, 0.0).finished();
  e.default_o_radii = Vec::Constant(1, 0.5);
  e.index_set = {1};
  e.beta_closed = [](const Vec& t) { return (Vec(2) << 1.0, -t[0]).finished(); };
  e.theta_closed = [](const Vec& t) { return Vec::Constant(1, -t[0]).eval(); };
  e.theta_inv_closed = [](const Vec& xi) { return Vec::Constant(1, -xi[0]).eval(); };
  e.weight_closed = [](const Vec&) { return 1.0; };
  PlanOverride plan;
  plan.varsigma = 0.5;
  plan.image_is_C = true;
  plan.c_volume = 1.0;
  plan.gamma_n_spacing = Vec::Constant(1, 1.0);
  plan.gamma_h_step = Vec::Constant(1, 1.0);
  e.plan = plan;
  e.onb_recipe = true;
  e.parseval_recipe = true;
  return e;
}

CatalogEntry make_solv_oscillator() {
  auto spec = std::make_shared<LieSplitSpec>();
  spec->name = "solv_oscillator";
  spec->n_dim = 3;
  spec->r_dim = 1;
  spec->allocate();
  spec->set_bracket(3, 0, 1, 1.0);   // [A, X1] = X2
  spec->set_bracket(3, 1, 0, -1.0);  // [A, X2] = -X1
  spec->set_bracket(3, 2, 2, 1.0);   // [A, X3] = X3
  spec->nilpotency_step_n = 1;
  spec->nilpotency_step_h = 1;
  spec->h_solvable = true;
  spec->h_exponential = true;
  Mat a = Mat::Zero(4, 4);
  a(0, 1) = -1.0;
  a(1, 0) = 1.0;
  a(2, 2) = 1.0;
  spec->matrix_realization = {elementary(4, 0, 3), elementary(4, 1, 3), elementary(4, 2, 3), a};

  CatalogEntry e;
  e.id = "solv_oscillator";
  e.description =
      "R^3 x| R with rotation+dilation action; simply connected solvable, not completely "
      "solvable; the induced representation is neither irreducible nor square-integrable";
  e.spec = spec;
  e.group = std::make_shared<HGroup>(spec);
  e.lambda = (Vec(3) << 0.0, 1.0, 0.0).finished();
  e.default_o_radii = Vec::Constant(1, 3.14159265358979323846 / 4.0);
  e.index_set = {0};
  e.beta_closed = [](const Vec& t) {
    return (Vec(3) << -std::sin(t[0]), std::cos(t[0]), 0.0).finished();
  };
  e.theta_closed = [](const Vec& t) { return Vec::Constant(1, -std::sin(t[0])).eval(); };
  e.theta_inv_closed = [](const Vec& xi) { return Vec::Constant(1, -std::asin(xi[0])).eval(); };
  e.weight_closed = [](const Vec& xi) { return 1.0 / std::sqrt(1.0 - xi[0] * xi[0]); };
  PlanOverride plan;
  plan.varsigma = std::sqrt(2.0) / 2.0;
  plan.c_volume = std::sqrt(2.0);
  plan.gamma_n_spacing = Vec::Constant(1, 1.0 / std::sqrt(2.0));
  plan.gamma_h_step = Vec::Constant(1, 1.0);
  e.plan = plan;
  e.parseval_recipe = true;
  return e;
}

CatalogEntry make_toeplitz_shearlet() {
  auto spec = std::make_shared<LieSplitSpec>();
  spec->name = "toeplitz_shearlet";
  spec->n_dim = 2;
  spec->r_dim = 2;
  spec->allocate();
  spec->set_bracket(2, 1, 0, 1.0);  // [A1, X2] = X1
  spec->set_bracket(3, 0, 0, 1.0);  // [A2, X1] = X1
  spec->set_bracket(3, 1, 1, 1.0);  // [A2, X2] = X2
  spec->nilpotency_step_n = 1;
  spec->nilpotency_step_h = 1;  // abelian h
  spec->h_solvable = true;
  spec->h_exponential = true;
  Mat a2 = Mat::Zero(3, 3);
  a2(0, 0) = 1.0;
  a2(1, 1) = 1.0;
  spec->matrix_realization = {elementary(3, 0, 2), elementary(3, 1, 2), elementary(3, 0, 1), a2};

  CatalogEntry e;
  e.id = "toeplitz_shearlet";
  e.description = "Toeplitz shearlet-type group R^2 x| R^2 with upper-triangular dilations";
  e.spec = spec;
  e.group = std::make_shared<HGroup>(spec);
  e.lambda = (Vec(2) << 1.0, 0.0).finished();
  e.default_o_radii = Vec::Constant(2, 1.0);
  e.index_set = {0, 1};
  e.beta_closed = [](const Vec& t) {
    double s = std::exp(-t[1]);
    return (Vec(2) << s, -s * t[0]).finished();
  };
  e.theta_closed = [](const Vec& t) {
    double s = std::exp(-t[1]);
    return (Vec(2) << s, -s * t[0]).finished();
  };
  e.theta_inv_closed = [](const Vec& xi) {
    return (Vec(2) << -xi[1] / xi[0], std::log(1.0 / xi[0])).finished();
  };
  e.weight_closed = [](const Vec& xi) { return 1.0 / (xi[0] * xi[0]); };
  e.parseval_recipe = true;
  return e;
}

CatalogEntry make_sl2_embed() {
  auto spec = std::make_shared<LieSplitSpec>();
  spec->name = "sl2_embed";
  spec->n_dim = 4;
  spec->r_dim = 3;
  // n-basis: E13, E14, E23, E24. h-basis ordered to match the chart axes
  // (theta, a-1, s): rotation generator, diag(1,-1), upper shear.
  Mat aj = Mat::Zero(4, 4), ad = Mat::Zero(4, 4), ae = Mat::Zero(4, 4);
  aj(0, 1) = -1.0;
  aj(1, 0) = 1.0;
  ad(0, 0) = 1.0;
  ad(1, 1) = -1.0;
  ae(0, 1) = 1.0;
  spec->matrix_realization = {elementary(4, 0, 2), elementary(4, 0, 3), elementary(4, 1, 2),
                              elementary(4, 1, 3), aj, ad, ae};
  structure_constants_from_realization(*spec);
  spec->nilpotency_step_n = 1;
  spec->h_solvable = false;
  spec->h_exponential = false;

  auto group = std::make_shared<HGroup>(spec);
  auto to_matrix = [](const Vec& c) {
    const double th = c[0], a = 1.0 + c[1], s = c[2];
    Mat m = Mat::Identity(4, 4);
    m(0, 0) = a * std::cos(th);
    m(0, 1) = a * s * std::cos(th) - std::sin(th) / a;
    m(1, 0) = a * std::sin(th);
    m(1, 1) = std::cos(th) / a + a * s * std::sin(th);
    return m;
  };
  auto to_coords = [](const Mat& m) {
    const double p = m(0, 0), q = m(0, 1), r = m(1, 0), w = m(1, 1);
    const double aa = p * p + r * r;
    Vec c(3);
    c[0] = std::atan2(r, p);
    c[1] = std::sqrt(aa) - 1.0;
    c[2] = (p * q + r * w) / aa;
    return c;
  };
  group->set_custom_chart(to_matrix, to_coords);
  // Declared Haar density a^{-3} d theta da ds, normalized at the identity.
  group->set_haar_closed_form([](const Vec& c) { return std::pow(1.0 + c[1], -3.0); });

  CatalogEntry e;
  e.id = "sl2_embed";
  e.description =
      "H = SL(2,R) embedded block-diagonally with N = gl(2,R); KAN chart (theta, a-1, s) with "
      "declared density a^-3 (the left-invariant density in these coordinates is a; the "
      "declared form is kept for the weight convention)";
  e.spec = spec;
  e.group = group;
  e.lambda = (Vec(4) << 1.0, 0.0, 0.0, 1.0).finished();
  e.default_o_radii = Vec::Constant(3, 0.3);
  e.index_set = {2, 1, 3};  // components (E23, E14, E24) of beta, in this order
  e.beta_closed = [](const Vec& c) {
    const double th = c[0], a = 1.0 + c[1], s = c[2];
    return (Vec(4) << std::cos(th) / a + a * s * std::sin(th), -a * std::sin(th),
            std::sin(th) / a - a * s * std::cos(th), a * std::cos(th))
        .finished();
  };
  e.theta_closed = [](const Vec& c) {
    const double th = c[0], a = 1.0 + c[1], s = c[2];
    return (Vec(3) << std::sin(th) / a - a * s * std::cos(th), -a * std::sin(th),
            a * std::cos(th))
        .finished();
  };
  e.theta_inv_closed = [](const Vec& xi) {
    const double a = std::sqrt(xi[1] * xi[1] + xi[2] * xi[2]);
    const double th = std::atan2(-xi[1], xi[2]);
    const double s = (std::sin(th) / a - xi[0]) / xi[2];
    return (Vec(3) << th, a - 1.0, s).finished();
  };
  e.weight_closed = [](const Vec& xi) {
    const double norm_sq = xi[1] * xi[1] + xi[2] * xi[2];
    return 1.0 / (std::abs(xi[2]) * norm_sq * norm_sq);
  };
  return e;
}

CatalogEntry make_onb_step3() {
  auto spec = std::make_shared<LieSplitSpec>();
  spec->name = "onb_step3";
  spec->n_dim = 3;
  spec->r_dim = 2;
  spec->allocate();
  spec->set_bracket(3, 1, 0, -1.0);  // [A1, X2] = -X1
  spec->set_bracket(3, 2, 1, -1.0);  // [A1, X3] = -X2
  spec->set_bracket(4, 2, 0, -1.0);  // [A2, X3] = -X1
  spec->nilpotency_step_n = 1;
  spec->nilpotency_step_h = 1;  // h abelian (the full group is step three)
  spec->h_solvable = true;
  spec->h_exponential = true;
  Mat a1 = -(elementary(4, 0, 1) + elementary(4, 1, 2));
  Mat a2 = -elementary(4, 0, 2);
  spec->matrix_realization = {elementary(4, 0, 3), elementary(4, 1, 3), elementary(4, 2, 3), a1,
                              a2};

  CatalogEntry e;
  e.id = "onb_step3";
  e.description =
      "step-three metabelian nilpotent group; indicator of [-1/2,1/2)^2 with integer lattices "
      "generates an orthonormal basis";
  e.spec = spec;
  e.group = std::make_shared<HGroup>(spec);
  e.lambda = (Vec(3) << 1.0, 0.0, 0.0).finished();
  e.default_o_radii = Vec::Constant(2, 0.5);
  e.index_set = {1, 2};
  e.beta_closed = [](const Vec& t) {
    return (Vec(3) << 1.0, t[0], 0.5 * t[0] * t[0] + t[1]).finished();
  };
  e.theta_closed = [](const Vec& t) {
    return (Vec(2) << t[0], 0.5 * t[0] * t[0] + t[1]).finished();
  };
  e.theta_inv_closed = [](const Vec& xi) {
    return (Vec(2) << xi[0], xi[1] - 0.5 * xi[0] * xi[0]).finished();
  };
  e.weight_closed = [](const Vec&) { return 1.0; };
  PlanOverride plan;
  plan.image_is_C = true;
  plan.c_volume = 1.0;
  plan.gamma_n_spacing = Vec::Constant(2, 1.0);
  plan.gamma_h_step = Vec::Constant(2, 1.0);
  e.plan = plan;
  e.onb_recipe = true;
  e.parseval_recipe = true;
  return e;
}

CatalogEntry make_free_nilpotent_step2() {
  // Reduced split for the free two-step group on three generators: only the
  // operators that enter the orthonormal basis are kept. With the central
  // functional value lam23, modulations act by exp(-2 pi i lam23 t x) and
  // translations by integers; the remaining generators are not needed.
  const double lam23 = 2.0;
  auto spec = std::make_shared<LieSplitSpec>();
  spec->name = "free_nilpotent_step2";
  spec->n_dim = 2;
  spec->r_dim = 1;
  spec->allocate();
  spec->set_bracket(2, 0, 1, 1.0);  // [A, X1] = X2 (A = X_2-generator, X2 central)
  spec->nilpotency_step_n = 1;
  spec->nilpotency_step_h = 1;
  spec->h_solvable = true;
  spec->h_exponential = true;
  spec->matrix_realization = {elementary(3, 1, 2), elementary(3, 0, 2), elementary(3, 0, 1)};

  CatalogEntry e;
  e.id = "free_nilpotent_step2";
  e.description =
      "reduced split of the step-two free nilpotent group on three generators (modulation and "
      "translation directions only; the full group is not a product N H). lam23 = 2";
  e.spec = spec;
  e.group = std::make_shared<HGroup>(spec);
  e.lambda = (Vec(2) << 0.0, lam23).finished();
  e.default_o_radii = Vec::Constant(1, 1.01);
  e.index_set = {0};
  e.beta_closed = [lam23](const Vec& t) {
    return (Vec(2) << -lam23 * t[0], lam23).finished();
  };
  e.theta_closed = [lam23](const Vec& t) { return Vec::Constant(1, -lam23 * t[0]).eval(); };
  e.theta_inv_closed = [lam23](const Vec& xi) {
    return Vec::Constant(1, -xi[0] / lam23).eval();
  };
  e.weight_closed = [lam23](const Vec&) { return 1.0 / lam23; };
  PlanOverride plan;
  plan.image_is_C = true;
  plan.c_volume = 2.0;  // Theta maps the unit window support onto a length-2 interval
  plan.gamma_n_spacing = Vec::Constant(1, 1.0 / lam23);
  plan.gamma_h_step = Vec::Constant(1, 1.0);
  plan.cli_applicable = false;  // pinned to the unit-interval window placement
  e.plan = plan;
  e.onb_recipe = true;
  return e;
}

}  // namespace

std::vector<std::string> catalog_ids() {
  return {"axb",       "heisenberg",       "solv_oscillator", "toeplitz_shearlet",
          "sl2_embed", "onb_step3",        "free_nilpotent_step2"};
}

CatalogEntry get_entry(const std::string& id) {
  if (id == "axb") return make_axb();
  if (id == "heisenberg") return make_heisenberg();
  if (id == "solv_oscillator") return make_solv_oscillator();
  if (id == "toeplitz_shearlet") return make_toeplitz_shearlet();
  if (id == "sl2_embed") return make_sl2_embed();
  if (id == "onb_step3") return make_onb_step3();
  if (id == "free_nilpotent_step2") return make_free_nilpotent_step2();
  throw UnsupportedError("get_entry: unknown catalog id '" + id + "'");
}

std::shared_ptr<const ThetaChart> make_entry_chart(const CatalogEntry& entry,
                                                   std::optional<Vec> o_radii,
                                                   int grid_per_axis) {
  std::vector<int> J = entry.index_set;
  if (J.empty()) {
    ImmersionReport report = immersion_check(*entry.spec, entry.lambda);
    if (!report.passed) throw UnsupportedError("make_entry_chart: immersion fails for " + entry.id);
    J = report.J;
  }
  Vec radii = o_radii.value_or(entry.default_o_radii);
  return std::make_shared<ThetaChart>(
      select_neighborhood_O(entry.group, entry.lambda, J, radii, grid_per_axis));
}

std::pair<LieSplitSpec, Vec> embed_construction(const EmbedKSpec& k) {
  const int n = k.n;
  const int r = static_cast<int>(k.k_basis.size());
  if (n < 1) throw DimensionError("embed_construction: matrix order must be positive");
  if (r > n * n)
    throw DimensionError("embed_construction: dim K exceeds n^2 (violates dim n >= dim h)");
  LieSplitSpec spec;
  spec.name = "embed_n" + std::to_string(n);
  spec.n_dim = n * n;
  spec.r_dim = r;
  const int sz = 2 * n;
  // n-basis: E_{i, n+j} row-major over (i, j)
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) spec.matrix_realization.push_back(elementary(sz, i, n + j));
  for (const Mat& kb : k.k_basis) {
    Mat m = Mat::Zero(sz, sz);
    m.topLeftCorner(n, n) = kb;
    spec.matrix_realization.push_back(m);
  }
  structure_constants_from_realization(spec);
  spec.nilpotency_step_n = 1;  // gl(n,R) block is abelian inside G
  spec.h_solvable = k.solvable;
  spec.h_exponential = k.exponential;
  spec.nilpotency_step_h = k.nilpotency_step;

  Vec lambda = Vec::Zero(n * n);
  for (int i = 0; i < n; ++i) lambda[i * n + i] = 1.0;  // trace pairing with Id
  return {std::move(spec), std::move(lambda)};
}

}  // namespace lieframe
